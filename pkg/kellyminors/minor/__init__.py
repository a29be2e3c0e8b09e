from ._operations import (
    MinorOperation,
    OperationKind,
    apply_operation,
    contract_cycle,
    cycle_representatives,
    delete_edge,
    delete_vertex,
    fresh_vertex,
    in_contract,
    out_contract,
    successors,
)
from ._script import ReplayResult, WitnessScript, replay, run_steps

__all__ = [
    "MinorOperation",
    "OperationKind",
    "ReplayResult",
    "WitnessScript",
    "apply_operation",
    "contract_cycle",
    "cycle_representatives",
    "delete_edge",
    "delete_vertex",
    "fresh_vertex",
    "in_contract",
    "out_contract",
    "replay",
    "run_steps",
    "successors",
]
