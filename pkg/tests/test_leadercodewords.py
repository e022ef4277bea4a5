from cosetforge.cosetleaders import covering_radius
from cosetforge.gf2 import Word, enumerate_codewords
from cosetforge.leadercodewords import compute_leader_codewords, l1_subset, verify_weight_bound
from cosetforge.oracle import brute_l1, brute_leader_codewords, verify_test_set
from cosetforge.ordering import make_order
from helpers import EXAMPLE1_LEADER_CODEWORDS, w


def test_example1_exact_set(example1):
    expected = {w(s, 10) for s in EXAMPLE1_LEADER_CODEWORDS}
    assert example1.lset.words == expected
    assert example1.lset.l1_words == expected
    assert len(example1.lset) == 14


def test_example1_only_the_weight_eight_codeword_is_missing(example1):
    nonzero = {c for c in enumerate_codewords(example1.code) if c.weight}
    assert nonzero - example1.lset.words == {Word.from_string("1111111100")}
    assert Word.from_string("1111111100") not in example1.lset
    assert max(e.weight for e in example1.lset) == 7 == 2 * covering_radius(example1.table) + 1


def test_repetition_code(rep3):
    assert rep3.lset.words == rep3.lset.l1_words == {Word.from_string("111")}


def test_hamming_leader_codewords(hamming7):
    words = hamming7.lset.words
    assert words == brute_leader_codewords(hamming7.code)
    assert len(words) == 7
    assert {c.weight for c in words} == {3}


def test_golay(golay23):
    assert len(golay23.lset) == len(golay23.lset.l1_words) == 253
    assert {c.weight for c in golay23.lset.words} == {7}


def test_bch(bch21):
    assert len(bch21.table) == 512
    assert len(bch21.lset) == 549
    # not the reference 470; see the acceptance report
    assert len(bch21.lset.l1_words) == 483
    assert verify_weight_bound(bch21.lset, bch21.table)


def test_bch_l1_under_lex():
    from cosetforge import codes

    _, lset = compute_leader_codewords(codes.bch21(), make_order(21, "lex"))
    assert len(lset) == 549
    assert len(lset.l1_words) == 526


def test_witnesses_satisfy_the_definition(example1, corpus):
    for a in [example1, *corpus[:25]]:
        t = a.table
        for e in a.lset:
            assert e.word.weight > 0 and a.code.contains(e.word)
            assert t.is_leader(e.n1) and t.is_leader(e.n2)
            assert e.i not in e.n1.support
            x = e.n1 + Word.unit(e.i, a.code.n)
            assert x.weight > e.n2.weight
            assert x + e.n2 == e.word
            if e.n2 == t.representative_of(e.n2):
                assert e.in_l1


def test_sorted_words_follow_the_order(example1):
    words = example1.lset.sorted_words()
    assert words == example1.table.order.sorted(words)
    assert example1.lset.sorted_words(l1_only=True) == words


def test_matches_oracles(corpus):
    for a in corpus[:40]:
        assert a.lset.words == brute_leader_codewords(a.code)
        assert a.lset.l1_words == brute_l1(a.code, a.table.order)


def test_l1_inside_l_and_both_are_test_sets(corpus, example1):
    for a in [example1, *corpus[:40]]:
        assert l1_subset(a.lset) <= a.lset.words
        assert verify_test_set(a.code, a.lset.l1_words)
        assert verify_test_set(a.code, a.lset.words)


def test_weight_bound(corpus):
    for a in corpus[:40]:
        assert verify_weight_bound(a.lset, a.table)


def test_sweep_alone_finds_every_leader_codeword(example1, golay23, bch21, corpus):
    # observed, not guaranteed; compute_leader_codewords only enforces sweep <= L
    for a in [example1, golay23, bch21, *corpus[:40]]:
        assert all(e.from_sweep for e in a.lset)


def test_perfect_codes_have_l_equal_l1(rep3, hamming7, golay23):
    for a in (rep3, hamming7, golay23):
        assert a.lset.words == a.lset.l1_words
        assert covering_radius(a.table) == a.code.t
