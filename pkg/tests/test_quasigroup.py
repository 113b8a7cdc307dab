import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from sigma_nuclei.corpus import cyclic_group, random_latin_square
from sigma_nuclei.errors import CayleySyntaxError, NotLatin
from sigma_nuclei.nuclei import NucleusKind, compute_sigma_nucleus, component_set
from sigma_nuclei.perm import Perm
from sigma_nuclei.quasigroup import (
    Quasigroup, garrison_nucleus, identity_elements, is_latin, parastrophe, parse_quasigroup, translation,
)
from sigma_nuclei.s3 import ALL_S3, S3Elem

from conftest import quasigroups


def test_parse_cyclic():
    q = parse_quasigroup("3\n0 1 2\n1 2 0\n2 0 1")
    assert q == cyclic_group(3)
    assert q(1, 2) == 0


def test_parse_comments_and_whitespace():
    q = parse_quasigroup("# header\n2   \n0 1 \n# mid\n1 0\n")
    assert q.rows() == [[0, 1], [1, 0]]


def test_parse_order_one():
    assert parse_quasigroup("1\n0").order == 1


def test_not_latin_reports_row():
    with pytest.raises(NotLatin) as err:
        parse_quasigroup("2\n0 1\n1 1")
    assert err.value.axis == "row" and err.value.index == 1


def test_not_latin_reports_column():
    with pytest.raises(NotLatin) as err:
        parse_quasigroup("2\n0 1\n0 1")
    assert err.value.axis == "column"


@pytest.mark.parametrize("text", ["", "x\n0", "2\n0 1", "2\n0 1\n1 0\n0 1", "2\n0 1\n1 2", "2\n0 1 0\n1 0"])
def test_syntax_errors(text):
    with pytest.raises(CayleySyntaxError):
        parse_quasigroup(text)


def test_table_is_read_only(z3):
    with pytest.raises(ValueError):
        z3.table[0, 0] = 1


def test_translations(z3):
    assert translation(z3, "left", 1) == Perm([1, 2, 0])
    assert translation(z3, "middle", 0) == Perm([0, 2, 1])
    assert translation(Quasigroup([[0]]), "right", 0) == Perm([0])


@given(quasigroups())
@settings(max_examples=60, deadline=None)
def test_middle_translation_defining_identity(q):
    for c in range(q.order):
        p = translation(q, "middle", c)
        assert all(q(x, p[x]) == c for x in range(q.order))


def test_latin_biconditional_on_all_small_tables():
    # every 3x3 array over {0,1,2}: Latin iff all left and right translations are bijections
    for cells in itertools.product(range(3), repeat=9):
        t = np.array(cells).reshape(3, 3)
        bij = all(len(set(t[c])) == 3 and len(set(t[:, c])) == 3 for c in range(3))
        assert is_latin(t) == bij


def test_parastrophe_examples(z3):
    assert parastrophe(z3, S3Elem.S12) == z3
    assert parastrophe(z3, S3Elem.S13).rows() == [[0, 2, 1], [1, 0, 2], [2, 1, 0]]
    assert parastrophe(z3, S3Elem.E) == z3


# For each τ, where x, y, z = x·y land as (first operand, second operand, result).
# The 3-cycles carry the opposite labels to the printed list of equivalences.
ROLE_OF = {
    S3Elem.S12: ("y", "x", "z"),
    S3Elem.S13: ("z", "y", "x"),
    S3Elem.S23: ("x", "z", "y"),
    S3Elem.S123: ("z", "x", "y"),
    S3Elem.S132: ("y", "z", "x"),
}


@given(quasigroups())
@settings(max_examples=40, deadline=None)
def test_parastrophe_role_equivalences(q):
    for tau, roles in ROLE_OF.items():
        p = parastrophe(q, tau)
        for x in range(q.order):
            for y in range(q.order):
                env = {"x": x, "y": y, "z": q(x, y)}
                assert p(env[roles[0]], env[roles[1]]) == env[roles[2]]


@given(quasigroups())
@settings(max_examples=40, deadline=None)
def test_parastrophe_composition(q):
    for s in ALL_S3:
        for t in ALL_S3:
            assert parastrophe(parastrophe(q, s), t) == parastrophe(q, s * t)


def test_s3_product_on_noncommutative_table(q4prime):
    # Q4' is not commutative, so a wrong product order would be caught here
    assert parastrophe(q4prime, S3Elem.S12) != q4prime
    for s in ALL_S3:
        for t in ALL_S3:
            assert parastrophe(parastrophe(q4prime, s), t) == parastrophe(q4prime, s * t)


def test_garrison_examples(z3, q4prime):
    assert garrison_nucleus(z3, "left").elements == {0, 1, 2}
    assert garrison_nucleus(q4prime, "right").elements == frozenset()
    # 2 and 3 are not left-nuclear: 2·(0·2) = 1 but (2·0)·2 = 0, and 3·(0·2) = 0 but (3·0)·2 = 1
    assert garrison_nucleus(q4prime, "left").elements == {0, 1}
    assert q4prime(2, q4prime(0, 2)) != q4prime(q4prime(2, 0), 2)
    assert q4prime(3, q4prime(0, 2)) != q4prime(q4prime(3, 0), 2)
    # the witness for the empty right nucleus
    assert q4prime(2, q4prime(0, 0)) == 3 and q4prime(q4prime(2, 0), 0) == 2


def test_identity_elements(z3, q4prime):
    assert identity_elements(z3) == (0, 0)
    assert identity_elements(q4prime) == (0, None)
    assert identity_elements(Quasigroup([[0]])) == (0, 0)


def test_garrison_implies_identities(corpus):
    for q in corpus:
        left, right = identity_elements(q)
        if garrison_nucleus(q, "left").elements:
            assert left is not None
        if garrison_nucleus(q, "right").elements:
            assert right is not None
        if garrison_nucleus(q, "middle").elements:
            assert left is not None and right is not None


def test_loop_left_nucleus_matches_translations(corpus):
    for q in list(corpus) + [random_latin_square(5, s) for s in range(5)]:
        left, right = identity_elements(q)
        if left is None or right is None:
            continue
        nuc = compute_sigma_nucleus(q, S3Elem.E, NucleusKind.L)
        firsts = component_set(nuc, 1).perms
        expected = {translation(q, "left", a) for a in garrison_nucleus(q, "left").elements}
        assert firsts == expected
