"""Bounded-rationality analysis of finite choice functions.

A library and CLI that decides and witnesses rationalizability by salience,
by linear salience, and with (salient) limited attention; detects moody
behavior through minimal-rationale search; and counts isomorphism classes
of small choice functions by property.
"""

from .attention import (
    CslaWitness,
    FilterTable,
    build_csla_witness,
    is_cla,
    is_csla_exhaustive,
    p_tilde,
    revealed_preference_p,
    verify_salient_filter,
)
from .axioms import (
    AXIOMS,
    AxiomVerdict,
    Switch,
    Witness,
    check_axiom,
    find_conflicting_menus,
    find_minimal_switches,
    reduce_switch,
)
from .core import (
    CanonicalCode,
    ChoiceFunction,
    GroundSet,
    Menu,
    canonical_form,
    count_choices,
    default_ground,
    enumerate_choices,
    make_choice,
    mask_of,
    members,
    menus,
    relabel,
    sample_choices,
    subchoice,
)
from .errors import (
    DuplicateMenu,
    EmptyMax,
    GroundTooLarge,
    InternalContractBreach,
    MissingMenu,
    NonMemberChoice,
    NotASwitch,
    NotExtendable,
    NotRls,
    ParseError,
    SalienceLabError,
    TooSmall,
    UnsupportedN,
)
from .fileio import parse_choice_file, serialize_choice
from .fixtures import Fixture, builtin_fixtures, get_fixture
from .lab import (
    BoundResult,
    CensusTable,
    RsWitness,
    check_flipped,
    classify_census,
    decimal_magnitude,
    hereditary_bound,
    is_moody,
    make_flipped_choice,
    minimal_rationale_count,
    sample_rls_choices,
    trivial_rs,
    verify_rs_witness,
)
from .relations import (
    LinearOrder,
    PropertyReport,
    Relation,
    check_properties,
    linear_extension,
    maximal_elements,
    transitive_closure,
)
from .salience import (
    RevealedSalience,
    RlsWitness,
    build_rls_witness,
    is_rls,
    revealed_salience,
    verify_rls_witness,
)

__version__ = "0.1.0"
