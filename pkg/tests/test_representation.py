"""Tests for the 26-variable differential-operator realization."""

from __future__ import annotations

from fractions import Fraction

from f4poly import algebra, poly, representation as rep
from f4poly.poly import Polynomial

X = Polynomial.variable
A1, A2, A3, A4 = algebra.F4_SIMPLE


def test_operator_labels():
    labels = rep.operator_labels()
    assert len(labels) == 52
    assert len(set(labels)) == 52
    assert sum(1 for l in labels if l[0] == "e") == 48
    assert sum(1 for l in labels if l[0] == "h") == 4


def test_transcribed_operator_examples():
    assert rep.transcribed_operator(("e", A2, 1)).apply(X(4)) == X(3)
    assert rep.transcribed_operator(("e", A1, -1)).apply(X(4)) == -X(6)
    assert rep.transcribed_operator(("h", 1)).apply(X(6)) == -X(6)


def test_operators_preserve_degree_and_cartans_are_diagonal():
    f = X(3) * X(17) + 2 * X(13) ** 2
    for label in rep.operator_labels():
        g = rep.operator(label).apply(f)
        assert g.is_zero() or g.degree() == 2
    for i in range(1, 5):
        op = rep.operator(("h", i))
        matrix = op.matrix()
        for r in range(26):
            for s in range(26):
                if r != s:
                    assert matrix[r][s] == 0


def test_errata_set_is_exactly_the_four_known_cells():
    records = rep.validate_table()
    seen = {(r["label"], r["row"], r["col"], r["transcribed"], r["oracle"]) for r in records}
    assert seen == {
        ("E+(0,1,1,0)", 3, 5, "1", "-1"),
        ("E+(0,1,1,0)", 22, 24, "-1", "1"),
        ("E-(0,1,1,0)", 5, 3, "-1", "1"),
        ("E-(0,1,1,0)", 24, 22, "1", "-1"),
    }


def test_every_other_operator_matches_oracle():
    flagged = {r["label"] for r in rep.validate_table()}
    for label in rep.operator_labels():
        if rep.label_string(label) in flagged:
            continue
        assert rep.transcribed_operator(label).matrix() == rep.operator(label).matrix()


def test_simple_pair_commutators_equal_minus_cartan():
    for i, root in enumerate(algebra.F4_SIMPLE, start=1):
        raising = rep.transcribed_operator(("e", root, 1))
        lowering = rep.transcribed_operator(("e", root, -1))
        comm = raising.commutator(lowering).matrix()
        cartan = rep.transcribed_operator(("h", i)).matrix()
        assert comm == [[-entry for entry in row] for row in cartan]


def test_lowering_operators_are_mirror_conjugates():
    for root in algebra.F4_POSITIVE:
        raising = rep.operator(("e", root, 1))
        lowering = rep.operator(("e", root, -1))
        assert poly.dual_op(raising).matrix() == lowering.matrix()


def test_zeta_seed_and_recursion():
    assert rep.zeta(1) == poly.from_pairs(
        ((2, (1, 13)), (1, (1, 14)), (-3, (2, 12)), (-3, (3, 10)), (3, (4, 8)), (-3, (5, 6)))
    )
    lower4 = rep.operator(("e", A4, -1))
    assert lower4.apply(rep.zeta(1)) == rep.zeta(2)
    for r in range(1, 15):
        assert rep.zeta(r) == rep.zeta_printed(r)


def test_zeta_mirror_rule_needs_the_sign_flip():
    for r in range(15, 27):
        mirrored = poly.dual(rep.zeta(27 - r))
        assert rep.zeta(r) == -mirrored
        assert rep.zeta(r) != mirrored


def test_zeta_members_are_a_weight_basis():
    assert poly.weight(rep.zeta(1)) == (0, 0, 0, 1)
    vectors = [rep.zeta(r) for r in range(1, 27)]
    assert rep.polys_rank(vectors) == 26


def test_module_copy_equivariance():
    assert rep.module_copy_equivariance_failures() == []


def test_theta_matches_printed_and_is_singular():
    assert rep.theta() == rep.theta_printed()
    assert poly.weight(rep.theta()) == (0, 0, 1, 0)
    for op in rep.simple_raising():
        assert op.apply(rep.theta()).is_zero()
        assert op.apply(rep.zeta(1)).is_zero()
        assert op.apply(X(1)).is_zero()


def test_invariants_annihilated_by_all_operators():
    eta1, eta2 = rep.eta1(), rep.eta2()
    assert poly.weight(eta1) == (0, 0, 0, 0)
    assert poly.weight(eta2) == (0, 0, 0, 0)
    for label in rep.operator_labels():
        op = rep.operator(label)
        assert op.apply(eta1).is_zero()
        assert op.apply(eta2).is_zero()


def test_printed_cubic_expansion_is_not_invariant():
    printed = rep.eta2_printed()
    assert rep.eta2() != printed
    lower3 = rep.operator(("e", A3, -1))
    assert not lower3.apply(printed).is_zero()


def test_elimination_identities():
    checks = {c.name: c for c in rep.verify_elimination_identities()}
    assert len(checks) == 10
    verbatim = {name for name, c in checks.items() if c.holds}
    assert verbatim == {
        "x1*x14",
        "3*x1*x15",
        "3*x1*x17",
        "3*x1*x19",
        "3*x1*x21",
        "3*x1*x22",
        "3*x1*x24",
        "3*x2*x25 + 3*x1*x26",
    }
    for name in ("3*x1*x23", "long elimination of x25/x26"):
        check = checks[name]
        assert not check.holds
        assert check.correction
        assert check.holds_with_correction
    assert checks["3*x1*x23"].diff == 6 * X(1) * X(23)


def test_formula_errata_labels():
    labels = [r["label"] for r in rep.formula_errata()]
    assert labels.count("cubic invariant expansion") == 1
    assert labels.count("invariant second-order operator") == 1
    mirror = [l for l in labels if l.endswith("mirror rule")]
    assert len(mirror) == 12
    elimination = [l for l in labels if l.startswith("elimination identity")]
    assert len(elimination) == 2


def test_predicted_counts():
    assert [rep.predicted_weight_counts(k) and sum(rep.predicted_weight_counts(k).values()) for k in range(5)] == [
        1,
        1,
        3,
        5,
        8,
    ]
    assert rep.predicted_weight((0, 0, 1, 0, 2)) == (0, 0, 1, 0)
    assert rep.predicted_weight((1, 1, 0, 0, 0)) == (0, 0, 0, 2)


def test_singular_vectors_degrees_0_to_3():
    expected_totals = {0: 1, 1: 1, 2: 3, 3: 5}
    for degree, total in expected_totals.items():
        report = rep.singular_vectors(degree)
        assert report.total == total
        assert report.predicted == total
        for entry in report.entries:
            assert entry.dim == len(entry.basis)
            for vector in entry.basis:
                assert poly.weight(vector) == entry.weight
        assert rep.products_span_kernels(report)


def test_singular_weights_match_generator_predictions():
    report = rep.singular_vectors(3)
    found = {entry.weight: entry.dim for entry in report.entries}
    assert found == rep.predicted_weight_counts(3)


def test_generator_products_are_singular_through_degree_5():
    raising = rep.simple_raising()
    for exps in rep.predicted_exponents(5) + rep.predicted_exponents(4):
        product = rep.generator_product(exps)
        for op in raising:
            assert op.apply(product).is_zero()


def test_laplacian_commutes_with_every_operator():
    for label in rep.operator_labels():
        assert rep.laplacian_commutator_symbol(rep.operator(label)) == {}


def test_laplacian_printed_block_differs_and_fails():
    assert rep.laplacian() != rep.laplacian_printed()
    printed_terms = dict(((a, b), c) for a, b, c in rep.laplacian_printed())
    derived_terms = dict(((a, b), c) for a, b, c in rep.laplacian())
    assert printed_terms[(13, 14)] == -1
    assert derived_terms[(13, 14)] == 3
    product = rep.zeta(1) * rep.theta()
    printed_value = Polynomial.zero()
    for a, b, c in rep.laplacian_printed():
        printed_value = printed_value + c * product.partial(a).partial(b)
    assert not printed_value.is_zero()
    assert rep.apply_laplacian(product).is_zero()


def test_laplacian_point_values():
    assert rep.apply_laplacian(X(1) * X(26)) == Polynomial.constant(3)
    assert rep.apply_laplacian(rep.eta1()) == Polynomial.constant(117)
    assert rep.apply_laplacian(X(13) ** 2) == Polynomial.constant(-6)
    assert rep.apply_laplacian(X(13) * X(14)) == Polynomial.constant(3)


def test_laplacian_annihilates_generator_products():
    for k1 in range(0, 6):
        for k2 in range(0, 2):
            if 0 < k1 + 3 * k2 <= 5:
                product = X(1) ** k1 * rep.theta() ** k2
                assert rep.apply_laplacian(product).is_zero()
    for m1 in range(0, 4):
        for m2 in range(0, 2):
            if m1 + 2 + 3 * m2 <= 5:
                product = X(1) ** m1 * rep.zeta(1) * rep.theta() ** m2
                assert rep.apply_laplacian(product).is_zero()


def test_harmonic_summand_bounds():
    expected = {2: 2, 3: 3, 4: 3, 5: 4}
    for degree, bound in expected.items():
        got_bound, witnesses = rep.harmonic_summand_bound(degree)
        assert got_bound == bound
        assert witnesses == bound
