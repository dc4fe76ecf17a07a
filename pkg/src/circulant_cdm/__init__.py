# Public API re-exports for convenient imports
from .circulant import CirculantSpec, CanonicalForm, make_spec, canonical_forms_valency5
from .classifier import ClassificationResult, Family, Reason, classify
from .labeler import Labeling, label, verify_labeling
from .oracle import SearchOutcome, SearchStatus, enumerate_specs, solve_cdm
from .spectral import admissible_set, is_admissible, spectrum

__version__ = "0.1.0"

__all__ = ["CirculantSpec", "CanonicalForm", "make_spec", "canonical_forms_valency5",
           "ClassificationResult", "Family", "Reason", "classify",
           "Labeling", "label", "verify_labeling",
           "SearchOutcome", "SearchStatus", "enumerate_specs", "solve_cdm",
           "admissible_set", "is_admissible", "spectrum"]
