import json

import pytest

import wordsys
from wordsys import DSeq, FreeElem, Perm, Solution


def test_perm_basics():
    f = Perm.transposition(0, 1)
    g = Perm.transposition(1, 2)
    h = f * g
    assert [h(m) for m in range(3)] == [1, 2, 0]
    assert h == Perm.cycle([0, 1, 2])
    assert (h * h.inverse()).is_identity()
    assert (h ** 3).is_identity()
    assert str(h) == "(0 1 2)"
    assert h.preimage(0) == 2


def test_metric():
    assert wordsys.metric(Perm.transposition(0, 1), Perm()) == 1.0
    assert wordsys.metric_exponent(Perm.transposition(2, 3), Perm.transposition(4, 5)) == 2
    assert wordsys.metric_exponent(Perm(), Perm()) is None


def test_structures():
    assert wordsys.is_automorphism("matching", Perm.transposition(0, 1))
    assert not wordsys.is_automorphism("matching", Perm.transposition(1, 2))


def test_dseq_and_scale():
    d = DSeq.transpositions()
    assert d.at(3) == Perm.transposition(6, 7)
    assert d.check_null(100)
    assert wordsys.build_scale(d, 1, 10) == list(range(0, 20, 2))
    assert wordsys.scale_violation(d, [0, 2, 4], 1) is None
    assert "not minimal" in wordsys.scale_violation(d, [0, 2, 5], 1)

    c = [Perm.transposition(0, 1), Perm.transposition(0, 1) * Perm.transposition(2, 3)]
    assert DSeq.cauchy_to_null(c).at(0) == Perm.transposition(2, 3)


def test_errors_carry_their_kind():
    with pytest.raises(wordsys.WordsysError) as info:
        DSeq.from_explicit([Perm()])
    assert info.value.kind == "NotNull"
    with pytest.raises(wordsys.WordsysError):
        Perm([(0, 1)])


def test_words():
    assert wordsys.parse_word("x1 x1 y1^0") == "x1^2"
    assert wordsys.word_length("x1^2 x2^-3") == 5
    assert wordsys.nu_word(0) == "y1"
    assert wordsys.nu_word(3) == "x1 y1^3"


def test_witness():
    w = wordsys.find_witness([], 0, 0)
    assert (w["i0"], w["i1"]) == (1, 5)
    assert wordsys.find_witness([1], 0, 0, cycle=True, search_bound=64) is None


def test_solution():
    s = Solution(DSeq.transpositions(), [1])
    assert s.apply(0, 2) == 3
    assert s.apply(1, 2) == 2
    assert s.inverse_apply(0, 3) == 2
    assert s.verify(4, 16) == []
    assert s.closure("matching", 16)
    assert s.stabilization_bound(0, 0) == 14
    assert Solution(DSeq.transpositions(), []).stabilization_bound(0, 0) == 12
    k = s.stabilization_bound(0, 2)
    assert s.approx_row(k, 0)(2) == 3


def test_free_group():
    g = FreeElem("z1 z2")
    assert str(g * FreeElem("z2^-1 z3")) == "z1 z3"
    assert (g ** 4).root(2) == g ** 2
    assert g.root(2) is None
    assert g.no_root_exponent() == 2
    assert FreeElem("z1^6").no_root_exponent() == 4
    assert FreeElem("z3 z1 z3^-1").project({1}) == FreeElem("z1")
    u, core = FreeElem("z1 z2 z3 z2^-1 z1^-1").cyclic_reduce()
    assert (str(u), str(core)) == ("z1 z2", "z3")
    assert str(wordsys.enumerate_h(1, 2)) == "z1^-1"
    assert wordsys.chain_run(FreeElem("z1"), [1, 2])["status"] == "dead"
    with pytest.raises(wordsys.WordsysError) as info:
        FreeElem().no_root_exponent()
    assert info.value.kind == "IdentityInput"


def test_reports():
    solve = wordsys.run_solve(nu={"prefix": [1]}, window=(4, 16))
    assert solve["equationCheck"] == "ok"
    assert [2, 3] in solve["bStar"][0][1]

    diag = wordsys.run_diagonalize(count=10)
    assert all(v["chain"]["status"] == "dead" for v in diag["verdicts"])
    assert diag["reverify"] == "ok"
    assert wordsys.run_verify_blocked(diag, count=10)["verdict"] == "ok"

    tampered = dict(diag, entries=[0] * len(diag["entries"]))
    assert wordsys.report_failed(wordsys.run_verify_blocked(tampered, count=10))

    a = wordsys.run_contrast(seed=4)
    assert a["permutationSide"] == "solved"
    assert a["freeSide"] == "blocked(20)"
    assert json.dumps(a) == json.dumps(wordsys.run_contrast(seed=4))

    with pytest.raises(TypeError):
        wordsys.run_solve(bogus=1)
