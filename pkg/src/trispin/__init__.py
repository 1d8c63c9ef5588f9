"""Three-qubit helicity spin states of polarized 1 -> 3 fermion decays.

Builds the normalized final-state spin state for scalar, vector and tensor
contact interactions, evaluates pairwise / one-to-other concurrences, the
monogamy deficits and the concurrence-triangle measure of genuine
three-party entanglement, and scans phase space or the parent-spin
orientation through a deterministic CSV/JSON command line.
"""
from .linalg import (EPS_HERM, EPS_NUM, EPS_TEST, SIGMA_Y, dagger,
                     hermitian_eig, hermitian_sqrt, kron, matmul, purity,
                     trace)
from .state import (ThreeQubitState, density_matrix, normalize,
                    partial_trace, partial_trace_matrix)
from .measures import (EntanglementReport, REPORT_FIELDS, concurrence_mixed,
                       concurrence_one_to_other, concurrence_pair,
                       full_report, monogamy_measure, triangle_gme)
from .amplitudes import (CouplingSet, DecayConfiguration, closed_form_tensor,
                         closed_form_vector, scalar_state,
                         spin_direction_from_rotation, tensor_state,
                         vector_state)
from .scan import (COLUMNS, ScanRequest, ScanRow, run_plane, run_point,
                   run_request, run_spin, serialize, parse_csv, write_output)

__version__ = "0.1.0"

__all__ = [
    "EPS_HERM", "EPS_NUM", "EPS_TEST", "SIGMA_Y", "dagger", "hermitian_eig",
    "hermitian_sqrt", "kron", "matmul", "purity", "trace",
    "ThreeQubitState", "density_matrix", "normalize", "partial_trace",
    "partial_trace_matrix",
    "EntanglementReport", "REPORT_FIELDS", "concurrence_mixed",
    "concurrence_one_to_other", "concurrence_pair", "full_report",
    "monogamy_measure", "triangle_gme",
    "CouplingSet", "DecayConfiguration", "closed_form_tensor",
    "closed_form_vector", "scalar_state", "spin_direction_from_rotation",
    "tensor_state", "vector_state",
    "COLUMNS", "ScanRequest", "ScanRow", "run_plane", "run_point", "run_request",
    "run_spin", "serialize", "parse_csv", "write_output",
]
