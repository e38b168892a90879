"""
Braids - Braid elements b_kl, braid words and exact identity checks.
"""

from braids.word import BraidWord, braid_element, check_pair, word_eval
from braids.checks import (
    YangBaxterCertificate,
    check_adjoint_intertwiner,
    check_charge_transport,
    check_distant_commutation,
    check_master_intertwiner,
    check_neutral_commutation,
    check_unitarity,
    check_unitarity_certificate,
    check_yang_baxter,
    yang_baxter_certificate,
)

__all__ = [
    "BraidWord",
    "braid_element",
    "check_pair",
    "word_eval",
    "YangBaxterCertificate",
    "check_adjoint_intertwiner",
    "check_charge_transport",
    "check_distant_commutation",
    "check_master_intertwiner",
    "check_neutral_commutation",
    "check_unitarity",
    "check_unitarity_certificate",
    "check_yang_baxter",
    "yang_baxter_certificate",
]
