"""Exact combinatorics of colored posets, stackwise vectors and their operator words."""
from .basis import (BasisEntry, CertificationReport, DependenceWitness, Expansion, StackwiseBasis,
                    build_basis, certify_standard, dependence_witness, expand_word, stackwise_vector,
                    case_consistency)
from .diagram import DynkinDiagram, adjacent, gcm
from .errors import (ECViolation, InconsistentMu, InputError, IntegralityViolation, LinearDependence,
                     MathematicalFailure, PosetError, PosetFormatError, SpanViolation, StackwiseError)
from .identities import (IdentityCheck, identity_grid, verify_altsum, verify_binomial,
                         verify_commute, verify_exchange, verify_gluing, verify_shift)
from .lattice import SplitLattice, build_lattice, lower_ideal, raise_ideal
from .mvector import (MVector, act_color, act_divided, act_word, enumerate_flags, flag_to_ppartition,
                      gravity_cmp_ideals, gravity_cmp_multisets, ppartition_to_flag, word_vector)
from .poset import AxiomReport, Classification, ColoredPoset, check_axiom, classify
from .rep import (MuTable, RelationReport, count_multichains, highest_weight, mu_table,
                  seshadri_basis, sym_power_action, verify_borel, verify_kacmoody, weight)
from .words import (GrowthRecord, Word, classify_augmented, grows_well, is_augmented, is_stackwise,
                    stackwise_word, word_cmp)

__version__ = "0.1.0"
