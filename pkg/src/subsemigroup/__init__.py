"""Substitution semigroups: classification, limit-set covers, fixed points,
uncountability certificates and logarithmic dimension bounds, all at exact
finite resolution with brute-force oracles alongside."""

from .errors import (
    EnumerationCapError,
    PreconditionError,
    ResolutionError,
    SubsemigroupError,
    ValidationError,
)
from .words import Alphabet, SENTINEL, is_prefix, letter_at, metric_value, shift, word_metric
from .substitution import (
    Substitution,
    apply,
    apply_prefix,
    compose,
    compose_lengths,
    first_letter,
    has_fixed_letter,
    is_prefix_injective,
    length_vector,
    prefix_injectivity_witness,
)
from .semigroup import (
    DEFAULT_CAP,
    GeneratorSet,
    composition_words,
    enumerate_realizations,
    fixed_letter_free,
    fixed_letter_witness,
    is_irreducible,
    min_image_length,
    min_image_lengths,
    realize,
    word_image_prefix,
)
from .flgraph import (
    ComponentDecomposition,
    FirstLetterGraph,
    build,
    decompose,
    dot_export,
    limitset_order,
)
from .fixedpoints import (
    Anchor,
    PrefixLanguage,
    find_anchors,
    fix_language,
    fixed_point_prefix,
    image_closure_language,
)
from .limitset import (
    CylinderDescriptor,
    UncountabilityCertificate,
    UncountabilityReport,
    certify_uncountable,
    cylinder_hit,
    invariance_check,
    limit_cylinders,
    limit_language,
    order_consistency_report,
    sadic_prefix,
    validate_certificate,
)
from .dimension import (
    DimensionReport,
    dimension_bound,
    distinctness_check,
    extremal_family,
    power_generating_set,
)
from .hull import (
    HullLanguage,
    hull_equality_report,
    hull_language,
    shift_invariance_check,
)
from .oracles import (
    RelationClaim,
    balanced,
    brute_fixed_letter,
    check_relation,
    normal_form_coverage,
)
from . import catalog

__all__ = [name for name in dir() if not name.startswith("_")]
