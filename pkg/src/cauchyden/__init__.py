"""Decide Cauchy density and related absoluteness properties of functors
between finite categories, finite quantale-enriched categories and finite
Lawvere metric spaces; compute Karoubi envelopes, completions and Morita
equivalence.
"""
from .base import INF, Quantale, RPlusBase, TwoBase
from .completion import (is_absolute_weight, is_cauchy_complete, karoubi, morita_equivalent,
                         precomposition_equivalence_check, quantale_completion)
from .contexts import (decompose_cd, group_domain_cd, groupoid_domain_classify, monoid_cd,
                       monoid_epi_refute, ordinary_preorder_cd, pi0_check,
                       preorder_2functor_cd, quantale_cd)
from .errors import CapExceeded, CauchydenError, PreconditionError, StructureError, Verdict
from .fincat import (FinCategory, FinFunctor, Monoid, MonoidHom, QuantCategory, QuantFunctor,
                     validate_category, validate_functor)
from .jsonio import load, to_json
from .prof import (is_cauchy_dense, is_fully_faithful, is_split_full, lan_condition,
                   laxepi_check, shortcut_report)

__version__ = "0.1.0"
