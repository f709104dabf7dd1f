import random

import pytest
from hypothesis import given

from helpers import characters, pairs, seeds
from ncshuffle import serialize as se
from ncshuffle.cumulants import t_boolean
from ncshuffle.sampling import random_functional
from ncshuffle.shuffle import log_map


@given(characters(N=4, k=2))
def test_character_round_trip(phi):
    assert se.loads(se.dumps(phi)) == phi
    assert se.dumps(se.loads(se.dumps(phi))) == se.dumps(phi)


@given(seeds)
def test_general_round_trip(seed):
    f = random_functional(random.Random(seed), 3, 2)
    assert se.loads(se.dumps(f)) == f


@given(characters(N=4))
def test_family_round_trip(phi):
    fam = t_boolean(phi, "2/3")
    back = se.loads(se.dumps(fam))
    assert back.kind == "tboolean" and back.t == fam.t and back.values == fam.values


@given(pairs(N=4))
def test_pair_round_trip(p):
    assert se.loads(se.dumps(p)) == p


def test_rationals_are_strings():
    text = se.dumps(log_map("left", se.loads('{"moments": ["1/2", "3"]}')))
    assert '"1/2"' in text and "0.5" not in text
    assert se.rational_str(3) == "3/1"


@pytest.mark.parametrize("bad", [
    '{"moments": [0.5]}',
    '{"alphabet": ["ab"], "truncation": 2, "kind": "character", "words": {}}',
    '{"alphabet": ["a"], "truncation": 0, "kind": "character", "words": {}}',
    '{"alphabet": ["a"], "truncation": 2, "kind": "character", "words": {"a": "1"}}',
    '{"alphabet": ["a"], "truncation": 2, "kind": "infchar", "words": {"aaa": "1"}}',
    '{"alphabet": ["a"], "truncation": 2, "kind": "mystery"}',
    '{"alphabet": ["a", "a"], "truncation": 1, "kind": "infchar"}',
    '{"truncation": 1, "kind": "infchar"}',
    '{"phi": {"moments": ["1"]}}',
    '[1, 2]',
    'not json',
])
def test_schema_errors(bad):
    with pytest.raises(se.SchemaError):
        se.loads(bad)
