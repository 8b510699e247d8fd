"""Exact truncated-series decisions for local Kahler immersions into
complex space forms: resolvability certificates, explicit maps, model
catalog, Wallach-set decisions and obstruction scans."""

from .scalars import CScalar, as_fraction, format_fraction
from .series import BiSeries, GradedOrder, HolSeries, det_series, \
    exp_series, index_of_ordinal, log1p_series, ordinal_of_index, \
    pow1p_series, solve_graded_fixed_point
from .radial import RSeries
from .diastasis import BochnerReport, b_transform, check_bochner_form, \
    normalize_to_diastasis
from .resolvability import CertifiedNotResolvable, CertifiedResolvable, \
    HartogsWitness, HermMatrix, MatrixWitness, NotPsd, Psd, ResolvableUpTo, \
    build_matrix, hartogs_criterion, hartogs_metric_check, psd_certify, \
    resolvability
from .immersion import Component, ImmersionMap, NonExistence, \
    NotResolvableError, Target, VerifyResult, factor_immersion, \
    indefinite_immersion, space_form_classification, space_form_immersion, \
    space_form_rank, verify_immersion
from .models import MODELS, ModelSpec, build_model, get_model, \
    hartogs_profile
from .symmetric import DomainInvariants, Membership, \
    bergman_scaling_decision, cartan_hartogs_decision, \
    cartan_hartogs_failure, ch_immersion, classical_invariants, \
    wallach_membership
from .bell import CigarLimit, CigarScan, bell_complete, bell_partial, \
    cigar_limit, cigar_scan
from .einstein import EinsteinResult, NotEinstein, einstein_estimate, \
    hessian_det, rescale_bochner

__version__ = "0.1.0"
