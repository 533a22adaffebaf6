import pytest

from triflip.embedding import build, serialize
from triflip.errors import BadParameter, TooSmall
from triflip.generators import (gen_canonical, gen_random, gen_sierpinski,
                                gen_stacked, lower_bound_size)
from triflip.septri import scan


def revalidate(t):
    return build(t.n, t.rot, t.outer)


def test_canonical_four_is_k4():
    t = gen_canonical(4)
    assert t.m == 6 and all(len(r) == 3 for r in t.rot)


def test_canonical_ten_degrees():
    t = gen_canonical(10)
    deg = [t.degree(v) for v in range(10)]
    assert deg[0] == deg[1] == 9
    assert deg[2] == deg[9] == 3
    assert deg[3:9] == [4] * 6
    assert t.outer == (0, 1, 2)
    assert len(scan(t)) == 6


def test_too_small():
    with pytest.raises(TooSmall):
        gen_canonical(3)
    with pytest.raises(TooSmall):
        gen_stacked(2)


@pytest.mark.parametrize("k, n, s", [(1, 10, 4), (2, 25, 13), (3, 70, 40)])
def test_sierpinski_sizes(k, n, s):
    t = gen_sierpinski(k)
    assert t.n == n == lower_bound_size(k)
    assert len(scan(t)) == s == (3 * n - 10) // 5


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sierpinski_every_partial(k):
    step = 1 if k < 4 else 9
    for p in range(0, 3 ** k + 1, step):
        t = revalidate(gen_sierpinski(k, p))
        assert t.n == lower_bound_size(k) + 5 * p
        idx = scan(t)
        assert 5 * len(idx) == 3 * t.n - 10
        seen = set()
        for s in idx.triangles:
            for e in s.edges():
                assert e not in seen
                seen.add(e)


def test_sierpinski_bad_parameters():
    with pytest.raises(BadParameter):
        gen_sierpinski(0)
    with pytest.raises(BadParameter):
        gen_sierpinski(1, 4)


def test_random_zero_steps_is_canonical():
    assert serialize(gen_random(12, 0, 5)) == serialize(gen_canonical(12))


def test_random_is_deterministic():
    assert serialize(gen_random(30, 100, 7)) == serialize(gen_random(30, 100, 7))
    assert serialize(gen_random(30, 100, 7)) != serialize(gen_random(30, 100, 8))


def test_random_fifty():
    t = revalidate(gen_random(50, 500, 1))
    assert t.m == 144


def test_random_rejects_negative_steps():
    with pytest.raises(BadParameter):
        gen_random(10, -1)


def test_stacked_small():
    assert len(scan(gen_stacked(4))) == 0
    assert len(scan(gen_stacked(5, 3))) == 1


def test_stacked_twenty():
    t = revalidate(gen_stacked(20, 7))
    assert len(scan(t)) >= 1
    assert serialize(gen_stacked(20, 7)) == serialize(t)


def test_all_generators_validate():
    for seed in range(20):
        revalidate(gen_stacked(35, seed))
        revalidate(gen_random(35, 70, seed))
