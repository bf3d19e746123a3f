"""Permutation group engine: stabilizer chains, conjugacy classes of
prime-order elements, class fusion and derangement verdicts."""

from .core import (BSGS, DEFAULT_SEED, DegreeTooLarge, IndexTooLarge,
                   NotASubgroup, ProductReplacer, bsgs, coset_action,
                   cycle_type, evaluate_word, fixed_points, identity_perm,
                   is_identity, is_transitive, orbit_of, perm_order,
                   perm_power, pinv, pmul, reduce_generators)
from .classes import (BudgetExceeded, ClassRec, FusedClass, GroupTooLarge,
                      NotNormal, NotTransitive, SocleClassData, class_fusion,
                      enumerate_group, fuse_classes, prime_order_classes,
                      socle_class_data)
from .verdict import (Verdict, derangement_verdict, find_derangement,
                      find_prime_power_derangement)
from .witness import verify_witness, witness_action, WitnessActionError
