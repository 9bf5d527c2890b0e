from apps.experiments.functions.ensemble_commands import cmd_distance, cmd_estimate, cmd_sample, cmd_stability
from apps.experiments.functions.ogp_commands import cmd_certify, cmd_exponent, cmd_ogp_scan, cmd_overlap_graph
from apps.experiments.models.choices import CommandName

commandpatterns = {
    CommandName.SAMPLE: cmd_sample,
    CommandName.ESTIMATE: cmd_estimate,
    CommandName.DISTANCE: cmd_distance,
    CommandName.STABILITY: cmd_stability,
}

commandpatterns |= {
    CommandName.OGP_SCAN: cmd_ogp_scan,
    CommandName.OVERLAP_GRAPH: cmd_overlap_graph,
    CommandName.EXPONENT: cmd_exponent,
    CommandName.CERTIFY: cmd_certify,
}
