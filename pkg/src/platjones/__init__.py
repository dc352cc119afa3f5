"""Jones polynomials of plat-closed braids via a unitary vertex-model
representation, cross-checked by an exact Kauffman-bracket oracle."""

from .braid import (
    BraidWord,
    CapReport,
    Syllable,
    format_word,
    mirror,
    parse,
    resolve_orientations,
    writhe,
)
from .errors import (
    AnnotationConflict,
    CapMismatch,
    DegenerateQ,
    IllConditioned,
    NegativeRadicand,
    NonAdmissibleTriple,
    NonUnitaryBlock,
    ParityMismatch,
    PlatJonesError,
    ResidualTooLarge,
    TooManyCrossings,
    UnannotatedSyllable,
    WordSyntaxError,
)
from .evaluator import (
    JonesResult,
    admissible_arc,
    convention_factor,
    evaluate,
    jones,
    unlink_normalization,
)
from .fusion import DualityMatrix, duality_matrix, racah
from .laurent import LaurentPoly, laurent_eval, laurent_fit, render_q
from .oracle import PlanarDiagram, jones_exact, kauffman_bracket, plat_diagram
from .qnum import QPoint, RealQPoint, q_factorial, q_number, triangle
from .qsim import StateVector, p_k, run
from .vertex import r_matrix, sigma_matrix, x_operator

__version__ = "0.1.0"

__all__ = [
    "AnnotationConflict",
    "BraidWord",
    "CapMismatch",
    "CapReport",
    "DegenerateQ",
    "DualityMatrix",
    "IllConditioned",
    "JonesResult",
    "LaurentPoly",
    "NegativeRadicand",
    "NonAdmissibleTriple",
    "NonUnitaryBlock",
    "ParityMismatch",
    "PlanarDiagram",
    "PlatJonesError",
    "QPoint",
    "RealQPoint",
    "ResidualTooLarge",
    "StateVector",
    "Syllable",
    "TooManyCrossings",
    "UnannotatedSyllable",
    "WordSyntaxError",
    "admissible_arc",
    "convention_factor",
    "duality_matrix",
    "evaluate",
    "format_word",
    "jones",
    "jones_exact",
    "kauffman_bracket",
    "laurent_eval",
    "laurent_fit",
    "mirror",
    "p_k",
    "parse",
    "plat_diagram",
    "q_factorial",
    "q_number",
    "r_matrix",
    "racah",
    "render_q",
    "resolve_orientations",
    "run",
    "sigma_matrix",
    "triangle",
    "unlink_normalization",
    "writhe",
    "x_operator",
    "__version__",
]
