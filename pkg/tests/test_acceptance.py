"""Acceptance gate: every criterion of the verification suite must pass.

Exact rational arithmetic everywhere, so every comparison is zero-tolerance.
One PASS/FAIL line is printed per check; run with -s to stream them.
"""

from qgring import verify


def _run(rows):
    for row in rows:
        print(row.line())
    failed = [row for row in rows if not row.passed]
    assert not failed, "\n".join(row.line() for row in failed)


def test_criterion_1_decomposition_shapes():
    _run(verify.rows_decompositions())


def test_criterion_2_nd_witnesses():
    _run(verify.rows_witnesses())


def test_criterion_3_sn_ssn_oracle_equivalence():
    _run(verify.rows_snssn())


def test_criterion_4_amitsur_criterion():
    _run(verify.rows_amitsur())


def test_criterion_5_theorem_nilpotent_agreement():
    _run(verify.rows_nilpotent())


def test_criterion_6_theorem_nonnilpotent_agreement():
    _run(verify.rows_nonnilpotent())


def test_criterion_7_property_suites():
    _run(verify.rows_properties())


def test_criterion_8_soundness_sentinel():
    _run(verify.rows_sentinel())
