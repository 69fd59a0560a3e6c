import pytest
from hypothesis import given, settings, strategies as st

from braidcert import freegroup as fg
from braidcert.errors import ParseError


def W(text):
    return fg.parse_word(text)


def test_reduce_examples():
    assert fg.reduce_word([(1, 1), (1, -1)]) == ()
    assert fg.reduce_word([("t", 1), (2, 1), (2, -1), ("t", -1)]) == ()
    assert fg.reduce_word([(1, 1), ("t", 1), ("t", -1), (2, 1)]) == ((1, 1), (2, 1))


@given(st.lists(st.tuples(st.integers(-3, 3), st.sampled_from([1, -1]))))
def test_reduce_idempotent(letters):
    once = fg.reduce_word(letters)
    assert fg.reduce_word(once) == once


@given(st.lists(st.tuples(st.integers(-2, 2), st.sampled_from([1, -1])), max_size=8))
def test_word_times_inverse_reduces_to_empty(letters):
    assert fg.concat(letters, fg.invert_word(letters)) == ()


def test_word_text_round_trip():
    for text in ["a1 a2^-1 t", "a-1 t^-1 a0", "1"]:
        w = W(text)
        assert fg.parse_word(fg.format_word(w)) == w
    with pytest.raises(ParseError):
        fg.parse_word("a1 b2")


GENS = fg.strand_gens(1, 3)  # four strands: a1..a4, t


def sigma(i):
    return fg.sigma_auto(i, GENS)


def sigma_inv(i):
    return fg.sigma_inv_auto(i, GENS)


def zeta(i):
    return fg.zeta_auto(i, GENS)


def test_generator_images():
    assert sigma(1).apply(W("a1")) == W("a2")
    assert zeta(1).apply(W("a1")) == W("t a2 t^-1")
    assert fg.FreeAutomorphism.identity(GENS).apply(W("a1 a1 a2")) == W("a1 a1 a2")


def test_sigma_inverse_two_sided():
    for i in (1, 2, 3):
        assert sigma(i).compose(sigma_inv(i)).is_identity()
        assert sigma_inv(i).compose(sigma(i)).is_identity()


def test_zeta_is_involution():
    for i in (1, 2, 3):
        assert zeta(i).compose(zeta(i)).is_identity()


def img(word_letters, lo=1, hi=3):
    return fg.manturov_image(word_letters, lo, hi)


def test_zeta_sigma_image():
    # the invariant of "zet_i sig_i" sends a_i to t^-1 a_i t
    got = img([("zet", 1, 1), ("sig", 1, 1)])
    assert got.image(1) == W("t^-1 a1 t")


def test_sigma_zeta_image():
    got = img([("sig", 1, 1), ("zet", 1, 1)])
    assert got.image(1) == W("t a2^-1 a1 a2 t^-1")


def test_sigma_zeta_not_equal_zeta_sigma():
    assert not fg.auto_equal(
        img([("sig", 1, 1), ("zet", 1, 1)]), img([("zet", 1, 1), ("sig", 1, 1)])
    )


def _forbidden_pair(i=1):
    lhs = img([("zet", i, 1), ("sig", i + 1, 1), ("sig", i, 1)])
    rhs = img([("sig", i + 1, 1), ("sig", i, 1), ("zet", i + 1, 1)])
    return lhs, rhs


def test_forbidden_move_tables():
    i = 1
    lhs, rhs = _forbidden_pair(i)
    assert lhs.image("t") == W("t")
    assert lhs.image(i) == W(f"a{i+2}")
    assert lhs.image(i + 1) == W(f"a{i+2}^-1 t a{i+1} t^-1 a{i+2}")
    assert lhs.image(i + 2) == W(f"a{i+2}^-1 t^-1 a{i} t a{i+2}")
    assert rhs.image(i) == W(f"a{i+2}")
    assert rhs.image(i + 1) == W(f"t a{i+2}^-1 a{i+1} a{i+2} t^-1")
    assert rhs.image(i + 2) == W(f"t^-1 a{i+2}^-1 a{i} a{i+2} t")
    assert not fg.auto_equal(lhs, rhs)
    assert fg.first_difference(lhs, rhs) == i + 1


def test_forbidden_move_merges_at_t_equal_one():
    lhs, rhs = _forbidden_pair()
    assert fg.auto_equal(lhs.specialize_t1(), rhs.specialize_t1())


def test_specialize_t1_examples():
    z = zeta(1)
    assert z.specialize_t1().image(1) == ((2, 1),)
    ident = fg.FreeAutomorphism.identity(GENS)
    assert ident.specialize_t1() == fg.FreeAutomorphism.identity(tuple(g for g in GENS if g != "t"))


def test_images_fix_t():
    for letters in [
        [("sig", 1, 1)],
        [("sig", 2, -1)],
        [("zet", 3, 1)],
        [("sig", 1, 1), ("zet", 2, 1), ("sig", 3, -1)],
    ]:
        assert img(letters).fixes_t()


def test_image_index_range_enforced():
    with pytest.raises(IndexError):
        img([("sig", 5, 1)])


braid_letters = st.lists(
    st.tuples(st.sampled_from(["sig", "zet"]), st.integers(1, 3), st.sampled_from([1, -1])),
    max_size=6,
)


@given(braid_letters, braid_letters)
@settings(max_examples=40, deadline=None)
def test_invariant_is_homomorphism(u, v):
    uv = list(u) + list(v)
    assert img(uv) == img(u).compose(img(v))


def _invert_braid_letters(letters):
    out = []
    for kind, index, exp in reversed(list(letters)):
        out.append((kind, index, -exp if kind == "sig" else 1))
    return out


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_all_vb_relators_map_to_identity(n):
    from braidcert.words import invariant, relator_table

    for rel in relator_table("vbA", n):
        assert fg.auto_equal(invariant(rel.lhs), invariant(rel.rhs)), rel.label
        # u v^-1 literally maps to the identity automorphism
        letters = list(rel.lhs.letters) + _invert_braid_letters(rel.rhs.letters)
        assert fg.manturov_image(letters, 1, n - 1).is_identity(), rel.label


def test_long_images_from_doubling():
    # the two sides of "z0 s1 z0 s1" vs "s1 z0 s1 z0" after doubling, n=2
    lo, hi = -1, 1
    w1 = [("zet", 0, 1), ("sig", -1, 1), ("sig", 1, 1), ("zet", 0, 1), ("sig", -1, 1), ("sig", 1, 1)]
    w2 = [("sig", -1, 1), ("sig", 1, 1), ("zet", 0, 1), ("sig", -1, 1), ("sig", 1, 1), ("zet", 0, 1)]
    i1 = fg.manturov_image(w1, lo, hi)
    i2 = fg.manturov_image(w2, lo, hi)
    assert i1.image(2) == W("a2^-1 t^-1 a0^-1 t a2 a1^-1 t^-1 a-1 t a1 a2^-1 t^-1 a0 t a2")
    assert i2.image(2) == W("a2^-1 a1^-1 a2 t^-1 a0^-1 a-1 a0 t a2^-1 a1 a2")
    assert not fg.auto_equal(i1, i2)
    assert fg.first_difference(i1, i2) == 2
