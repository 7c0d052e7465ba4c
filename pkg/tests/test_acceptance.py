"""Acceptance suite: one test per release criterion, exact tolerances.

Every check is coefficientwise equality of unbounded integers (or set
inclusion over residues); nothing here is approximate.  Each criterion
prints a PASS/FAIL line (visible with `pytest -s`).
"""

from qpart.cli import main as cli_main
from qpart.congruence import (
    MOD7_FAMILY_ROWS,
    CongruenceClaim,
    dissected_component,
    dissection_rhs,
    family_expression,
    lift_factorization_holds,
    ramanujan_claims,
    replay_proof,
    verify_claim,
    verify_dissection_identity,
    verify_frobenius,
    verify_mod7_family,
    verify_mod7_lifts,
)
from qpart.etaq import THETA_PRODUCT_FORM, ThetaFamily, eval_eta, theta_series
from qpart.partitions import ColoredFamilySpec, Family, count, oracle_series


def _report(num: int, description: str, ok: bool) -> None:
    print(f"ACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'}: {description}")
    assert ok, f"criterion {num} failed: {description}"


def test_criterion_01_identity_suite():
    ok = all(
        theta_series(family, 500) == eval_eta(THETA_PRODUCT_FORM[family], 500)
        for family in ThetaFamily
    )
    _report(1, "four closed-form sums equal their product sides exactly "
               "through order 500", ok)


def test_criterion_02_mod7_support_residues():
    cube = eval_eta("f1^3", 700).reduce_mod(7).support_residues(7)
    ok = cube <= {0, 1, 3}
    for text in ("f1^5/f2^2", "f1^2*f4^2/f2", "f2^5/f1^2"):
        support = eval_eta(text, 700).reduce_mod(7).support_residues(7)
        ok = ok and support <= {0, 1, 5}
    _report(2, "mod-7 supports within {0,1,3} / {0,1,5} through order 700", ok)


def test_criterion_03_dissection_identity_reproduction():
    report = verify_dissection_identity(100)
    component = dissected_component(100)
    divisible = all(component[n] % 7 == 0 for n in range(100))
    constant_ok = component[0] == 7 and eval_eta(dissection_rhs(), 1)[0] == 7
    ok = report.equal and divisible and constant_ok
    _report(3, "dissected residue-2 series equals the eight-term right side "
               "exactly through order 100, every coefficient divisible by 7", ok)


def test_criterion_04_mod7_family_table():
    reports = verify_mod7_family(300)
    ok = (len(reports) == 5
          and all(r.holds for r in reports)
          and [(r.claim.spec.colors, r.claim.residue) for r in reports]
          == list(MOD7_FAMILY_ROWS))
    _report(4, "all five built-in mod-7 congruences hold for n = 0..299", ok)


def test_criterion_05_lifted_rows_and_factorization():
    reports = verify_mod7_lifts(3, 100)
    ok = len(reports) == 20 and all(r.holds for r in reports)
    ok = ok and all(
        lift_factorization_holds(j, k, 200)
        for j in range(4) for k in range(1, 8)
    )
    _report(5, "lifted rows hold for j = 0..3, n = 0..99, and the "
               "factorization congruence holds through order 200", ok)


def test_criterion_06_oracle_equivalence():
    ok = True
    for k in range(1, 9):
        for family in Family:
            spec = ColoredFamilySpec(family, k)
            ok = ok and oracle_series(spec, 61) == eval_eta(family_expression(spec), 61)
    ok = ok and count(ColoredFamilySpec(Family.ODD_COLORED, 3), 3) == 16
    ok = ok and count(ColoredFamilySpec(Family.ODD_COLORED, 1), 4) == 5
    _report(6, "DP oracle equals eta-quotient expansion for both families, "
               "k = 1..8, through order 61; spot values 16 and 5 match", ok)


def test_criterion_07_frobenius_grid():
    ok = all(
        verify_frobenius(a, b, p, 300)
        for a in (1, 2, 3) for b in (1, 2) for p in (2, 3, 5, 7)
    )
    _report(7, "f_a^(b*p) == f_(a*p)^b (mod p) for the full (a, b, p) grid "
               "through order 300", ok)


def test_criterion_08_proof_replays():
    ok = True
    for k in (1, 3, 4, 5, 7):
        trace = replay_proof(k, 300)
        ok = ok and trace.verified and trace.target not in trace.sumset
    _report(8, "support-residue proofs replay and verify for all five rows", ok)


def test_criterion_09_classical_partition_congruences():
    ok = all(verify_claim(claim, 200).holds for claim in ramanujan_claims())
    _report(9, "p(5n+4), p(7n+5), p(11n+6) congruences hold for n = 0..199", ok)


def test_criterion_10_negative_control(capsys):
    spec = ColoredFamilySpec(Family.ODD_COLORED, 1)
    report = verify_claim(CongruenceClaim(spec, 7, 0), 50)
    ok = (not report.holds
          and report.counterexample.n == 0
          and report.counterexample.value == 1)
    exit_code = cli_main(["verify", "claim", "--family", "a", "--k", "1",
                          "--mod", "7", "--residue", "0", "--upto", "10"])
    capsys.readouterr()  # swallow the CLI line
    ok = ok and exit_code == 1
    _report(10, "false claim is rejected with counterexample n=0, value 1, "
                "and the CLI exits 1", ok)
