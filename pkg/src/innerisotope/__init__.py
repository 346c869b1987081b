"""Inner isotopes of K^n by coordinate permutations: idempotents, spectra, automorphisms."""
from .algebra import Algebra, check_identities, direct_sum, inner_isotope, isotope, product_algebra
from .field import PrimeField, admissible_prime
from .idem import idempotents_bruteforce, idempotents_chain, idempotents_formula
from .kernels import BACKEND
from .perm import Permutation

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "BACKEND",
    "Permutation",
    "PrimeField",
    "admissible_prime",
    "check_identities",
    "direct_sum",
    "idempotents_bruteforce",
    "idempotents_chain",
    "idempotents_formula",
    "inner_isotope",
    "isotope",
    "product_algebra",
]
