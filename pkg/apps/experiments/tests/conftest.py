import pytest

from apps.experiments.functions.loader import parse_config

TROTTER = {"variant": "trotter_annealing", "depth": 1, "betas": [0.3], "gammas": [[0.7]]}

TOY_PARAMS = {
    "gamma": 1.0, "gamma_star": 0.5, "delta": 0.2, "m": 2, "eta": 0.5, "Q": 1, "beta": 10.0, "kappa": 0.0, "F": 1.0,
    "R": 10, "p_est": 0.5, "degree_bound": 2.0, "d_max": 1.0, "f": 0.0, "L": 0.001, "n": 100,
    "p_st": 1e-9, "p_f": 1e-9, "p_b": 1e-9,
}


@pytest.fixture
def make_config(tmp_path):
    """
    Validated run documents writing into a per-test directory.
    """

    def build(command: str, out: str = "run", **payload):
        return parse_config({**payload, "output_dir": str(tmp_path / out)}, command)

    return build


def body(path) -> list[str]:
    with open(path, encoding="utf-8") as handle:
        return [line for line in handle if not line.startswith("#")]
