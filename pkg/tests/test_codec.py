from __future__ import annotations

import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mmpts import reference as ref
from mmpts.codec import (
    ALPHABET,
    BadHeader,
    Corpus,
    LengthMismatch,
    MalformedString,
    NonCanonicalLeave,
    corpus_for,
    decode,
    dumps,
    encode,
    loads,
    payload_length,
    read_file,
    read_seeds,
    write_file,
    write_seeds,
)
from mmpts.design import Claim, Design, validate
from mmpts.seeds import canonical_leave, paper_seeds, small_order_seeds
from mmpts.transforms import normalize_leave

from oracles import sample_mmpts17, small_pool

ROW1 = "468ab798abb8ab7aa99b"
ROW1_TRIPLES = "024 036 058 07a 09b 127 139 148 15a 16b 25b 268 29a 34b 357 38a 46a 479 569 78b"


def test_decode_row_one():
    d = decode(ROW1, 12)
    assert d.triples[:5] == ((0, 2, 4), (0, 3, 6), (0, 5, 8), (0, 7, 10), (0, 9, 11))
    assert validate(d, Claim.MMPTS).ok
    assert d.leave == {(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11)}


def test_encode_row_one_from_its_triples():
    d = Design(12, [tuple(int(c, 16) for c in tok) for tok in ROW1_TRIPLES.split()])
    assert encode(d) == ROW1
    assert encode(decode(ROW1, 12)) == ROW1


def test_published_strings_round_trip():
    for s, *_ in ref.MMPTS12:
        assert encode(decode(s, 12)) == s


@pytest.mark.parametrize("v, n", [(17, 44), (16, 37), (14, 28), (12, 20)])
def test_payload_lengths(v, n):
    assert payload_length(v, canonical_leave(v)) == n


def test_v17_payload_has_44_characters():
    for d in sample_mmpts17("Q1"):
        s = encode(d)
        assert len(s) == 44
        assert set(s) <= set(ALPHABET[:17])
        assert decode(s, 17) == d


def test_truncated_payload():
    with pytest.raises(LengthMismatch):
        decode(ROW1[:-1], 12)


def test_malformed_payloads():
    with pytest.raises(MalformedString):
        decode("z" + ROW1[1:], 12)
    with pytest.raises(MalformedString):
        decode("2" + ROW1[1:], 12)  # third point not above the second
    with pytest.raises(MalformedString):
        decode(ROW1[:5] + "4" + ROW1[6:], 12)  # reuses a covered pair


def test_non_canonical_leave(mmpts12):
    # swapping points 1 and 2 turns the leave pair 01 into 02
    d = mmpts12[0].relabel([0, 2, 1] + list(range(3, 12)))
    with pytest.raises(NonCanonicalLeave):
        encode(d)
    assert decode(encode(d, d.leave), 12, d.leave) == d
    assert encode(normalize_leave(d))


def test_file_round_trip(tmp_path, mmpts12):
    path = tmp_path / "m12.txt"
    corpus = corpus_for(12, mmpts12)
    write_file(path, corpus)
    back = read_file(path)
    assert back.designs == corpus.designs
    assert (back.v, back.type_tag, back.leave, back.kind) == (12, "-", canonical_leave(12), "mmpts")
    text = path.read_text()
    assert text.splitlines()[0] == "# mmpts v=12 type=- leave=01,23,45,67,89,ab"
    write_file(tmp_path / "again.txt", back)
    assert (tmp_path / "again.txt").read_text() == text


def test_file_with_787_designs(tmp_path, suite):
    path = tmp_path / "m14.txt"
    write_file(path, corpus_for(14, suite.designs(14)))
    back = read_file(path)
    assert len(back) == 787
    assert all(validate(d, Claim.MMPTS).ok for d in back)


def test_length_error_names_the_line(mmpts12):
    text = dumps(corpus_for(12, mmpts12))
    lines = text.splitlines()
    lines[3] = lines[3][:-2]
    with pytest.raises(LengthMismatch, match="line 4"):
        loads("\n".join(lines) + "\n")


def test_bad_headers():
    with pytest.raises(BadHeader):
        loads("468ab798abb8ab7aa99b\n")
    with pytest.raises(BadHeader):
        loads("# mmpts type=Q\n")
    with pytest.raises(BadHeader):
        loads("# mmpts v=12 type=X leave=01,23,45,67,89,ab\n")
    with pytest.raises(BadHeader):
        loads("")


def test_type_tag_is_kept(design_q):
    text = dumps(Corpus(11, [design_q], "Q", canonical_leave(11)))
    assert text.startswith("# mmpts v=11 type=Q leave=01,03,12,23\n")
    assert loads(text).type_tag == "Q"


def test_seed_files_round_trip():
    seeds = list(paper_seeds().values()) + small_order_seeds(12)
    buf = io.StringIO()
    write_seeds(seeds, buf)
    text = buf.getvalue()
    assert text.startswith("# seed v=17 name=N1 leave=01,03,12,23\n024 056 078 09a 0bc 0de 0fg 135 257")
    back = read_seeds(io.StringIO(text))
    assert back == seeds


@settings(max_examples=1000, deadline=None)
@given(st.sampled_from(small_pool()), st.randoms(use_true_random=False))
def test_decode_encode_round_trip(d, rng):
    p = list(range(d.v))
    rng.shuffle(p)
    e = normalize_leave(d.relabel(p))
    s = encode(e)
    assert len(s) == payload_length(e.v, e.leave)
    assert decode(s, e.v) == e
    assert encode(decode(s, e.v)) == s
