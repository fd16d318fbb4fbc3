"""Stack-sorting preimages, valid hook configurations and sliding bijections."""
from .perm import (Perm, all_perms, chi, chi_tilde, contains, count_av, enumerate_av, format_perm,
                   normalize, parse_patterns, parse_perm, rot, rot_inv)
from .sliding import swl, swl_inv, swu, swu_inv, theta
from .stacksort import fertility, preimages, sort_once
from .stats import joint_distribution, tail_length, zeil
from .verify import CLAIMS, VerificationReport, run_claim
from .vhc import Hook, ValidHookConfiguration, enumerate_vhcs, fertility_via_vhc, make_vhc

__version__ = "0.1.0"

__all__ = [
    "Perm", "all_perms", "chi", "chi_tilde", "contains", "count_av", "enumerate_av", "format_perm",
    "normalize", "parse_patterns", "parse_perm", "rot", "rot_inv",
    "swl", "swl_inv", "swu", "swu_inv", "theta",
    "fertility", "preimages", "sort_once",
    "joint_distribution", "tail_length", "zeil",
    "CLAIMS", "VerificationReport", "run_claim",
    "Hook", "ValidHookConfiguration", "enumerate_vhcs", "fertility_via_vhc", "make_vhc",
]
