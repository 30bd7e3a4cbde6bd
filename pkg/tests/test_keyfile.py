"""Key file serialization round trips and validation."""

from random import Random

import pytest

from circlelog import ConsistencyError, ParseError, keygen, make_params
from circlelog.keyfile import load_key, parse_key, save_key, serialize_key
from circlelog.protocols import KeyPair, PublicKey


@pytest.fixture
def keypair():
    return keygen(make_params(97, 5, 16), Random(13))


def test_private_roundtrip_byte_exact(tmp_path, keypair):
    path = tmp_path / "key.priv"
    save_key(keypair, path)
    assert load_key(path) == keypair
    first = path.read_bytes()
    save_key(load_key(path), path)
    assert path.read_bytes() == first


def test_public_roundtrip(tmp_path, keypair):
    path = tmp_path / "key.pub"
    save_key(keypair.public, path)
    loaded = load_key(path)
    assert isinstance(loaded, PublicKey)
    assert loaded == keypair.public


def test_serialized_layout(keypair):
    text = serialize_key(keypair)
    assert text == (
        "circlelog-key v1\n"
        "role: private\n"
        "n: 97\n"
        "g: 5\n"
        "p: 16\n"
        f"x: {keypair.x}\n"
    )


def test_private_recomputes_public(keypair):
    loaded = parse_key(serialize_key(keypair))
    assert isinstance(loaded, KeyPair)
    assert loaded.h == keypair.h


def test_optional_h_line_checked(keypair):
    good = serialize_key(keypair) + f"h: {keypair.h.k}\n"
    assert parse_key(good) == keypair
    bad = serialize_key(keypair) + f"h: {(keypair.h.k + 1) % 97}\n"
    with pytest.raises(ConsistencyError):
        parse_key(bad)


def test_non_primitive_generator_rejected():
    text = "circlelog-key v1\nrole: public\nn: 4\ng: 2\np: 8\nh: 1\n"
    with pytest.raises(ParseError, match="subgroup"):
        parse_key(text)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("nonsense\n", "header"),
        ("circlelog-key v1\nrole: signer\n", "role"),
        ("circlelog-key v1\nrole: public\nn: x\n", "decimal"),
        ("circlelog-key v1\nrole: public\nn: 97\ng: 5\np: 16\n", "h"),
        ("circlelog-key v1\nrole: private\nn: 97\ng: 5\np: 16\nx: 0\n", "x="),
        ("circlelog-key v1\nrole: public\nn: 97\ng: 5\np: 16\nh: 3\nextra\n", "trailing"),
    ],
)
def test_malformed_files_name_the_problem(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_key(text)
