from . import errors, export, util
from ._braid import BraidLetter, BraidWord, QuasipositivityCertificate, conjugate, cyclic_reduce, cyclic_rotate, \
    flip_indices, format_braid, free_reduce, is_positive, load_certificate, negative_stabilize, parse_braid, \
    positive_stabilize, pure_negative_level, reverse_word, self_linking, verify_quasipositive
from ._openbook import CoverParams, CurveLabel, LiftedPage, SignedTwist, TwistWord, homology_action, lift_letter, \
    lift_monodromy, lifted_page, page_intersection, page_linking, verify_lift_relations
from ._surgery import SpecialBlock, SurgeryComponent, SurgeryDiagram, build_diagram, detect_special_blocks, \
    linking_rule, prefix_normalize
from ._forms import signature, smith_normal_form
from ._invariants import ComparisonVerdict, Conclusion, Flag, InvariantReport, analyze, classify, compare, \
    compare_many, d3_invariant, tight_lens_d3
from ._oracle import LaurentPoly, alexander_poly, burau_reduced, h1_order_fox
from ._catalog import CatalogEntry, CatalogResult, build_family, default_catalog, run_catalog, run_entry
from .export import export_diagram, load_diagram, write_diagram, write_report

__all__ = [
    'BraidLetter',
    'BraidWord',
    'QuasipositivityCertificate',
    'parse_braid',
    'format_braid',
    'load_certificate',
    'self_linking',
    'positive_stabilize',
    'negative_stabilize',
    'conjugate',
    'free_reduce',
    'cyclic_reduce',
    'cyclic_rotate',
    'reverse_word',
    'flip_indices',
    'is_positive',
    'verify_quasipositive',
    'pure_negative_level',
    'CoverParams',
    'CurveLabel',
    'LiftedPage',
    'SignedTwist',
    'TwistWord',
    'lifted_page',
    'lift_letter',
    'lift_monodromy',
    'page_linking',
    'page_intersection',
    'homology_action',
    'verify_lift_relations',
    'SurgeryComponent',
    'SurgeryDiagram',
    'SpecialBlock',
    'prefix_normalize',
    'build_diagram',
    'linking_rule',
    'detect_special_blocks',
    'smith_normal_form',
    'signature',
    'Flag',
    'Conclusion',
    'InvariantReport',
    'ComparisonVerdict',
    'd3_invariant',
    'tight_lens_d3',
    'classify',
    'analyze',
    'compare',
    'compare_many',
    'LaurentPoly',
    'burau_reduced',
    'alexander_poly',
    'h1_order_fox',
    'CatalogEntry',
    'CatalogResult',
    'build_family',
    'default_catalog',
    'run_entry',
    'run_catalog',
    'export_diagram',
    'load_diagram',
    'write_diagram',
    'write_report',
    'errors',
    'export',
    'util',
]
