import logging
from pathlib import Path

import numpy as np

from _library.error_codes import MALFORMED_CONFIG_ERROR
from _library.exceptions import ConfigurationError
from apps.hamiltonians.models import INSTANCE_SCHEMA_VERSION, DisorderInstance, InstanceRecord

logger = logging.getLogger(__name__)


def run_length_encode(mask: np.ndarray) -> tuple[int, list[int]]:
    mask = np.asarray(mask, dtype=bool)
    if mask.size == 0:
        return 0, []
    change = np.flatnonzero(mask[1:] != mask[:-1]) + 1
    bounds = np.concatenate(([0], change, [mask.size]))
    return int(mask[0]), np.diff(bounds).astype(int).tolist()


def run_length_decode(first: int, runs: list[int]) -> np.ndarray:
    values = [(first + index) % 2 for index in range(len(runs))]
    return np.repeat(np.array(values, dtype=bool), runs)


def serialize_instance(instance: DisorderInstance) -> str:
    first, runs = run_length_encode(instance.mask)
    record = InstanceRecord(
        spec=instance.spec,
        seed=instance.seed,
        trial=instance.trial,
        mask_first=first,
        mask_runs=runs,
        couplings=[float(value).hex() for value in instance.couplings],
    )
    return record.model_dump_json(indent=2)


def deserialize_instance(text: str) -> DisorderInstance:
    try:
        record = InstanceRecord.model_validate_json(text)
    except ValueError as e:
        raise ConfigurationError(MALFORMED_CONFIG_ERROR, message="Malformed instance record", info=str(e)) from e

    if record.schema_version != INSTANCE_SCHEMA_VERSION:
        raise ConfigurationError(MALFORMED_CONFIG_ERROR, message="Unsupported instance schema", version=record.schema_version)

    mask = run_length_decode(record.mask_first, record.mask_runs)
    couplings = np.array([float.fromhex(value) for value in record.couplings])
    if mask.size != record.spec.term_count or couplings.size != record.spec.term_count:
        raise ConfigurationError(
            MALFORMED_CONFIG_ERROR,
            message="Instance record length does not match its model",
            mask=int(mask.size),
            couplings=int(couplings.size),
            expected=record.spec.term_count,
        )
    return DisorderInstance(spec=record.spec, mask=mask, couplings=couplings, seed=record.seed, trial=record.trial)


def write_instance(instance: DisorderInstance, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_instance(instance) + "\n", encoding="utf-8")
    return path


def read_instance(path: Path) -> DisorderInstance:
    return deserialize_instance(Path(path).read_text(encoding="utf-8"))


