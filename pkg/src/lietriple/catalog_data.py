"""Expected invariant fingerprints of the catalog entries, frozen.

Generated by tools/freeze_fingerprints.py; the test suite recomputes every
fingerprint and compares against this table.
"""

from .classify import Fingerprint
from .lie import KillingSignature

EXPECTED_FINGERPRINTS = {
    "dim2-1": Fingerprint(
        dim_m=2,
        m_derived_dims=(2, 2),
        m_center_dim=0,
        lts_radical_dim=0,
        h_dim=1,
        g_dim=3,
        g_derived_dims=(3, 3),
        g_lcs_dims=(3, 3),
        g_killing=KillingSignature(0, 3, 0),
        g_radical_dim=0,
        g_center_dim=0,
        canonical=True,
    ),
    "dim2-2": Fingerprint(
        dim_m=2,
        m_derived_dims=(2, 2),
        m_center_dim=0,
        lts_radical_dim=0,
        h_dim=1,
        g_dim=3,
        g_derived_dims=(3, 3),
        g_lcs_dims=(3, 3),
        g_killing=KillingSignature(2, 1, 0),
        g_radical_dim=0,
        g_center_dim=0,
        canonical=True,
    ),
    "dim2-3": Fingerprint(
        dim_m=2,
        m_derived_dims=(2, 2),
        m_center_dim=0,
        lts_radical_dim=0,
        h_dim=1,
        g_dim=3,
        g_derived_dims=(3, 3),
        g_lcs_dims=(3, 3),
        g_killing=KillingSignature(2, 1, 0),
        g_radical_dim=0,
        g_center_dim=0,
        canonical=True,
    ),
    "dim2-4a": Fingerprint(
        dim_m=2,
        m_derived_dims=(2, 1, 0),
        m_center_dim=0,
        lts_radical_dim=2,
        h_dim=1,
        g_dim=3,
        g_derived_dims=(3, 2, 0),
        g_lcs_dims=(3, 2, 2),
        g_killing=KillingSignature(0, 1, 2),
        g_radical_dim=3,
        g_center_dim=0,
        canonical=True,
    ),
    "dim2-4b": Fingerprint(
        dim_m=2,
        m_derived_dims=(2, 1, 0),
        m_center_dim=0,
        lts_radical_dim=2,
        h_dim=1,
        g_dim=3,
        g_derived_dims=(3, 2, 0),
        g_lcs_dims=(3, 2, 2),
        g_killing=KillingSignature(1, 0, 2),
        g_radical_dim=3,
        g_center_dim=0,
        canonical=True,
    ),
    "dim2-5": Fingerprint(
        dim_m=2,
        m_derived_dims=(2, 0),
        m_center_dim=2,
        lts_radical_dim=2,
        h_dim=0,
        g_dim=2,
        g_derived_dims=(2, 0),
        g_lcs_dims=(2, 0),
        g_killing=KillingSignature(0, 0, 2),
        g_radical_dim=2,
        g_center_dim=2,
        canonical=True,
    ),
    "dim3-I": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 0),
        m_center_dim=3,
        lts_radical_dim=3,
        h_dim=0,
        g_dim=3,
        g_derived_dims=(3, 0),
        g_lcs_dims=(3, 0),
        g_killing=KillingSignature(0, 0, 3),
        g_radical_dim=3,
        g_center_dim=3,
        canonical=True,
    ),
    "dim3-II": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 1, 0),
        m_center_dim=1,
        lts_radical_dim=3,
        h_dim=1,
        g_dim=4,
        g_derived_dims=(4, 2, 0),
        g_lcs_dims=(4, 2, 1, 0),
        g_killing=KillingSignature(0, 0, 4),
        g_radical_dim=4,
        g_center_dim=1,
        canonical=True,
    ),
    "dim3-III+": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 1, 0),
        m_center_dim=1,
        lts_radical_dim=3,
        h_dim=1,
        g_dim=4,
        g_derived_dims=(4, 2, 0),
        g_lcs_dims=(4, 2, 2),
        g_killing=KillingSignature(1, 0, 3),
        g_radical_dim=4,
        g_center_dim=1,
        canonical=True,
    ),
    "dim3-III-": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 1, 0),
        m_center_dim=1,
        lts_radical_dim=3,
        h_dim=1,
        g_dim=4,
        g_derived_dims=(4, 2, 0),
        g_lcs_dims=(4, 2, 2),
        g_killing=KillingSignature(0, 1, 3),
        g_radical_dim=4,
        g_center_dim=1,
        canonical=True,
    ),
    "dim3-IV+": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 1, 0),
        m_center_dim=1,
        lts_radical_dim=3,
        h_dim=1,
        g_dim=4,
        g_derived_dims=(4, 2, 0),
        g_lcs_dims=(4, 2, 2),
        g_killing=KillingSignature(1, 0, 3),
        g_radical_dim=4,
        g_center_dim=1,
        canonical=True,
    ),
    "dim3-IV-": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 1, 0),
        m_center_dim=1,
        lts_radical_dim=3,
        h_dim=1,
        g_dim=4,
        g_derived_dims=(4, 2, 0),
        g_lcs_dims=(4, 2, 2),
        g_killing=KillingSignature(0, 1, 3),
        g_radical_dim=4,
        g_center_dim=1,
        canonical=True,
    ),
    "dim3-V+": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 2, 1, 0),
        m_center_dim=1,
        lts_radical_dim=3,
        h_dim=1,
        g_dim=4,
        g_derived_dims=(4, 3, 1, 0),
        g_lcs_dims=(4, 3, 3),
        g_killing=KillingSignature(1, 0, 3),
        g_radical_dim=4,
        g_center_dim=1,
        canonical=True,
    ),
    "dim3-V-": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 2, 1, 0),
        m_center_dim=1,
        lts_radical_dim=3,
        h_dim=1,
        g_dim=4,
        g_derived_dims=(4, 3, 1, 0),
        g_lcs_dims=(4, 3, 3),
        g_killing=KillingSignature(0, 1, 3),
        g_radical_dim=4,
        g_center_dim=1,
        canonical=True,
    ),
    "dim3-VI": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 2, 0),
        m_center_dim=0,
        lts_radical_dim=3,
        h_dim=2,
        g_dim=5,
        g_derived_dims=(5, 4, 0),
        g_lcs_dims=(5, 4, 4),
        g_killing=KillingSignature(0, 0, 5),
        g_radical_dim=5,
        g_center_dim=0,
        canonical=True,
    ),
    "split-1a": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 2, 2),
        m_center_dim=1,
        lts_radical_dim=1,
        h_dim=1,
        g_dim=4,
        g_derived_dims=(4, 3, 3),
        g_lcs_dims=(4, 3, 3),
        g_killing=KillingSignature(0, 3, 1),
        g_radical_dim=1,
        g_center_dim=1,
        canonical=True,
    ),
    "split-1b": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 2, 2),
        m_center_dim=1,
        lts_radical_dim=1,
        h_dim=1,
        g_dim=4,
        g_derived_dims=(4, 3, 3),
        g_lcs_dims=(4, 3, 3),
        g_killing=KillingSignature(2, 1, 1),
        g_radical_dim=1,
        g_center_dim=1,
        canonical=True,
    ),
    "split-1c": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 2, 2),
        m_center_dim=1,
        lts_radical_dim=1,
        h_dim=1,
        g_dim=4,
        g_derived_dims=(4, 3, 3),
        g_lcs_dims=(4, 3, 3),
        g_killing=KillingSignature(2, 1, 1),
        g_radical_dim=1,
        g_center_dim=1,
        canonical=True,
    ),
    "split-2": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 3),
        m_center_dim=0,
        lts_radical_dim=1,
        h_dim=3,
        g_dim=6,
        g_derived_dims=(6, 6),
        g_lcs_dims=(6, 6),
        g_killing=KillingSignature(0, 3, 3),
        g_radical_dim=3,
        g_center_dim=0,
        canonical=True,
    ),
    "split-3": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 3),
        m_center_dim=0,
        lts_radical_dim=1,
        h_dim=3,
        g_dim=6,
        g_derived_dims=(6, 6),
        g_lcs_dims=(6, 6),
        g_killing=KillingSignature(2, 1, 3),
        g_radical_dim=3,
        g_center_dim=0,
        canonical=True,
    ),
    "split-4": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 3),
        m_center_dim=0,
        lts_radical_dim=1,
        h_dim=3,
        g_dim=6,
        g_derived_dims=(6, 6),
        g_lcs_dims=(6, 6),
        g_killing=KillingSignature(2, 1, 3),
        g_radical_dim=3,
        g_center_dim=0,
        canonical=True,
    ),
    "split-5": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 3),
        m_center_dim=0,
        lts_radical_dim=1,
        h_dim=2,
        g_dim=5,
        g_derived_dims=(5, 5),
        g_lcs_dims=(5, 5),
        g_killing=KillingSignature(2, 1, 2),
        g_radical_dim=2,
        g_center_dim=0,
        canonical=True,
    ),
    "split-6": Fingerprint(
        dim_m=3,
        m_derived_dims=(3, 3),
        m_center_dim=0,
        lts_radical_dim=1,
        h_dim=2,
        g_dim=5,
        g_derived_dims=(5, 5),
        g_lcs_dims=(5, 5),
        g_killing=KillingSignature(2, 1, 2),
        g_radical_dim=2,
        g_center_dim=0,
        canonical=True,
    ),
}
