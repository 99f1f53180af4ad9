import json

from shiftgen.genericity import (
    VERDICT_SHIFTED_GENERIC,
    VERDICT_THRESHOLD,
    VERDICT_VANISHES_DIGITS,
    ShiftCertificate,
    certify_shifted_generic,
    classify_weight,
    cpsk_check,
    digit_vanishing_check,
    enumerate_filtration_sections,
    large_prime_collapse,
    qprime_stability,
    verify_certificate,
)
from shiftgen.rootsys import build_root_system
from shiftgen.weights import q_shift

A1 = build_root_system("A1")
A2 = build_root_system("A2")


def test_digit_vanishing_check():
    same = digit_vanishing_check(A1, (5,), (5,), 2, 4, 1)
    assert same["digit_difference"] == 0
    assert same["finite_group"] == "may-be-nonzero"
    # 20 differing digits beats d = 16 at m = 1
    lam = (2**40 - 1,)  # forty 1-digits
    mu = (2**20 - 1,)  # twenty 1-digits
    out = digit_vanishing_check(A1, lam, mu, 2, 40, 1)
    assert out["digit_difference"] == 20 and out["d"] == 16
    assert out["finite_group"] == VERDICT_VANISHES_DIGITS
    # never claims vanishing at or below the bound
    close = digit_vanishing_check(A1, (2**10 - 1,), (0,), 2, 40, 1)
    assert close["digit_difference"] == 10 <= close["d"]
    assert close["finite_group"] == "may-be-nonzero"


def test_cpsk_check_examples():
    ok = cpsk_check(A1, [(1,)], 1, 2, 1, 3)
    assert ok["pass"] and ok["q"] == 16
    assert ok["iso_range"] == 1 and ok["injective_at"] == 2
    bad = cpsk_check(A1, [(1,)], 1, 2, 1, 2)
    assert not bad["pass"]
    assert any(v["rhs"] == 3 for v in bad["violations"])
    trivial = cpsk_check(A1, [(0,)], 0, 2, 0, 2)
    assert trivial["pass"]


def test_certify_threshold_not_met():
    cert = certify_shifted_generic(A1, (3,), (0,), 2, 13, 0)
    assert cert.verdict == VERDICT_THRESHOLD
    deficit = next(t for t in cert.thresholds if t["name"].startswith("deficit"))
    assert deficit["lhs"] == 1
    assert not verify_certificate(A1, cert, (3,), (0,), 2, 13, 0)


def test_certify_trivial_pair():
    cert = certify_shifted_generic(A1, (0,), (0,), 2, 14, 0)
    assert cert.verdict == VERDICT_SHIFTED_GENERIC
    assert verify_certificate(A1, cert, (0,), (0,), 2, 14, 0)


def test_certify_example_two_low_digits():
    cert = certify_shifted_generic(A1, (3,), (0,), 2, 14, 0)
    assert cert.verdict == VERDICT_SHIFTED_GENERIC
    start, length = cert.zero_run
    assert length >= 4  # e0 + f0 + g = 0 + 2 + 2
    assert (length + 1) * (2 + 1) >= 14 + 1
    assert cert.lambda_prime == q_shift(A1, (3,), 2, 14, cert.e % 14)
    assert verify_certificate(A1, cert, (3,), (0,), 2, 14, 0)


def test_certify_vanishing_by_digits():
    # m = 0 gives d' = 2; three nonzero digits forces the vanishing verdict
    cert = certify_shifted_generic(A1, (2**0 + 2**5 + 2**9,), (0,), 2, 14, 0)
    assert cert.verdict == VERDICT_VANISHES_DIGITS
    assert not verify_certificate(A1, cert, (2**0 + 2**5 + 2**9,), (0,), 2, 14, 0)


def test_certificate_json_roundtrip():
    cert = certify_shifted_generic(A1, (3,), (0,), 2, 14, 0)
    data = json.loads(json.dumps(cert.to_json()))
    back = ShiftCertificate.from_json(data)
    assert back == cert
    assert set(data) >= {"verdict", "e", "lambda_prime", "mu_prime",
                         "zero_run", "thresholds", "chain"}
    assert all({"name", "lhs", "rhs", "holds"} <= set(t) for t in data["thresholds"])
    assert all({"iso", "cite"} <= set(c) for c in data["chain"])


def test_tampered_certificate_rejected():
    cert = certify_shifted_generic(A1, (3,), (0,), 2, 14, 0)
    data = cert.to_json()
    data["lambda_prime"] = [1]
    assert not verify_certificate(A1, ShiftCertificate.from_json(data),
                                  (3,), (0,), 2, 14, 0)
    data = cert.to_json()
    data["zero_run"] = [0, 14]
    assert not verify_certificate(A1, ShiftCertificate.from_json(data),
                                  (3,), (0,), 2, 14, 0)


def test_run_selector_alternates():
    # lambda = 1 + 2^7: two zero runs of length >= 4 (positions 1-6, 8-13)
    lam = (1 + 2**7,)
    first = certify_shifted_generic(A1, lam, (0,), 2, 14, 0, run_selector=0)
    second = certify_shifted_generic(A1, lam, (0,), 2, 14, 0, run_selector=1)
    assert first.zero_run != second.zero_run
    assert verify_certificate(A1, first, lam, (0,), 2, 14, 0)
    assert verify_certificate(A1, second, lam, (0,), 2, 14, 0)


def test_collapse_examples():
    triv = large_prime_collapse(A1, (0,), (0,), 11, 2, 0)
    assert triv["c_route"]["applies"] and triv["c_route"]["e"] == 0
    assert triv["b_route"]["nu"] == (0,)

    out = large_prime_collapse(A1, (11,), (33,), 11, 2, 0)
    assert out["thresholds"][1]["holds"]  # 11 > 13h - 16 = 10
    assert out["c_route"]["applies"] and out["c_route"]["e"] == 0

    low = large_prime_collapse(A1, (1,), (1,), 23, 1, 2)
    assert low["a"]["applies"]  # 23 >= 6m + 7h - 9 = 17
    assert not low["b_route"]["applies"]  # 23 < 34 = 12m + 13h - 16
    assert not low["c_route"]["applies"]


def test_collapse_no_zero_digit():
    out = large_prime_collapse(A1, (1 + 11,), (1 + 11,), 11, 2, 0)
    assert not out["b_route"]["applies"]
    assert "zero digit" in out["b_route"]["reason"]


def test_qprime_stability():
    out = qprime_stability(A1, (5,), (0,), 37, 1, 0)
    assert out["applies"]
    assert out["lambda_prime"] == (185,)
    assert out["q_prime"] == 37**2
    low = qprime_stability(A1, (1,), (0,), 5, 1, 0)
    assert not low["applies"]


def test_classify_routes():
    # big r: delegates to the shift certificate
    out = classify_weight(A1, (3,), 2, 14, 0)
    assert out["route"] == "shift-certificate"
    assert out["certificate"].verdict == VERDICT_SHIFTED_GENERIC

    # zero is always conjugate to itself
    out = classify_weight(A1, (0,), 11, 1, 1)
    assert out["route"] == "small-conjugate-replacement"
    assert out["mu_prime"] == (0,)

    # (mu + rho, alpha-coroot) divisible by p: not p-regular
    out = classify_weight(A1, (10,), 11, 1, 1)
    assert out["route"] == "vanishes-not-p-regular"

    # small p, small r: nothing applies
    out = classify_weight(A1, (1,), 2, 1, 1)
    assert out["route"] == "no-route-applicable"


def test_filtration_sections_a1():
    secs = enumerate_filtration_sections(A1, 2)
    assert [(s.gamma, s.layer, s.dim_product) for s in secs] == [
        ((0,), 0, 1), ((1,), 1, 4), ((2,), 2, 9),
    ]
    assert all(s.gamma_star == s.gamma for s in secs)


def test_filtration_sections_a2():
    secs = enumerate_filtration_sections(A2, 1)
    gammas = {s.gamma for s in secs}
    assert gammas == {(0, 0), (1, 0), (0, 1)}
    by_gamma = {s.gamma: s for s in secs}
    assert by_gamma[(1, 0)].gamma_star == (0, 1)
    assert by_gamma[(1, 0)].dim_product == 9
    assert by_gamma[(0, 0)].dim_product == 1


def test_filtration_star_closure_exactly_once():
    for label, b in [("A2", 3), ("B2", 4), ("G2", 5), ("A3", 3)]:
        rs = build_root_system(label)
        secs = enumerate_filtration_sections(rs, b)
        gammas = [s.gamma for s in secs]
        assert len(gammas) == len(set(gammas))  # exactly once
        gamma_set = set(gammas)
        for s in secs:
            assert s.gamma_star in gamma_set  # closed under duality
            partner = next(t for t in secs if t.gamma == s.gamma_star)
            assert partner.gamma_star == s.gamma
            assert partner.dim_product == s.dim_product


def test_filtration_default_cutoff():
    secs = enumerate_filtration_sections(A1)
    assert max(s.layer for s in secs) == 4  # 6m + 6h - 8 at m = 0
