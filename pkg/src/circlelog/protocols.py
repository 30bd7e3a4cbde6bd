"""Key exchange, encryption, and signatures over the roots-of-unity group.

DH and ElGamal run on exact exponent arithmetic for any n >= 2. The
signature scheme is an ECDSA-style construction over a prime-order group
whose commitment value R is recovered from the fixed-point angle through the
continuous logarithm; parameters must satisfy the recovery bound so that the
round trip through the numeric representation can never fail.

None of this is secure: the cryptanalysis module measures exactly how cheap
the inversion is. The package exists to make that measurement.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from random import Random

from .contlog import exponent_recovery_bound, recover_exponent
from .errors import AmbiguousAngle, CompositeOrder, InvalidOrder, MessageTooLarge
from .group import (
    ExactElement,
    GroupParams,
    element,
    generator,
    inv,
    mul,
    power,
    to_numeric,
)


@dataclass(frozen=True)
class PublicKey:
    params: GroupParams
    h: ExactElement


@dataclass(frozen=True)
class KeyPair:
    params: GroupParams
    x: int
    h: ExactElement

    @property
    def public(self) -> PublicKey:
        return PublicKey(self.params, self.h)


@dataclass(frozen=True)
class Ciphertext:
    c1: ExactElement  # ephemeral g^y
    c2: ExactElement  # masked message m * h^y


@dataclass(frozen=True)
class Signature:
    R: int
    s: int


def random_scalar(rng: Random, n: int) -> int:
    """Uniform in [1, n) by rejection from ceil(log2 n)-bit strings."""
    bits = (n - 1).bit_length()
    while True:
        v = rng.getrandbits(bits)
        if 1 <= v < n:
            return v


def generator_power(params: GroupParams, e: int, base: ExactElement | None = None) -> ExactElement:
    """g^e, optionally offset by a fixed base point (defaults to identity)."""
    q = power(generator(params), e)
    return q if base is None else mul(q, base)


def keygen(params: GroupParams, rng: Random) -> KeyPair:
    if params.n < 2:
        raise InvalidOrder("key generation needs a group of order >= 2")
    x = random_scalar(rng, params.n)
    return KeyPair(params, x, generator_power(params, x))


def dh_public(keypair: KeyPair) -> ExactElement:
    return keypair.h


def dh_shared(own: KeyPair, their_public: ExactElement) -> ExactElement:
    """S = (their g^b)^a; both sides land on g^(ab)."""
    return power(their_public, own.x)


def elgamal_encrypt(pk: PublicKey | KeyPair, m: ExactElement, rng: Random) -> Ciphertext:
    if isinstance(pk, KeyPair):
        pk = pk.public
    y = random_scalar(rng, pk.params.n)
    return Ciphertext(
        c1=generator_power(pk.params, y),
        c2=mul(m, power(pk.h, y)),
    )


def elgamal_decrypt(sk: KeyPair, ct: Ciphertext) -> ExactElement:
    return mul(ct.c2, inv(power(ct.c1, sk.x)))


def encode_message(data: bytes, params: GroupParams) -> ExactElement:
    """Big-endian bytes -> integer -> group element; bijective on [0, n)."""
    value = int.from_bytes(data, "big")
    if value >= params.n:
        raise MessageTooLarge(f"message integer {value} >= group order {params.n}")
    return element(params, value)


def decode_message(m: ExactElement) -> bytes:
    k = m.k
    return k.to_bytes((k.bit_length() + 7) // 8, "big") if k else b""


def hash_to_scalar(message: bytes, n: int) -> int:
    """SHA-256 digest as a big-endian 256-bit integer, reduced mod n."""
    return int.from_bytes(hashlib.sha256(message).digest(), "big") % n


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the fixed witness set covers n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _check_signature_params(params: GroupParams) -> None:
    if params.n < 5 or not is_prime(params.n):
        raise CompositeOrder(f"signatures need a prime group order >= 5, got n={params.n}")
    if not exponent_recovery_bound(params.n, params.p):
        raise AmbiguousAngle(
            f"precision p={params.p} is below the recovery bound for n={params.n}; "
            "commitment recovery could fail"
        )


def sign(sk: KeyPair, message: bytes, rng: Random) -> Signature:
    """ECDSA-style: R is the commitment exponent read back via the continuous log."""
    _check_signature_params(sk.params)
    n = sk.params.n
    e = hash_to_scalar(message, n)
    while True:
        w = random_scalar(rng, n)
        commitment = generator_power(sk.params, w)
        big_r = recover_exponent(to_numeric(commitment)) % n
        if big_r == 0:
            continue
        s = pow(w, -1, n) * (e + sk.x * big_r) % n
        if s == 0:
            continue
        return Signature(R=big_r, s=s)


def verify(pk: PublicKey | KeyPair, message: bytes, sig: Signature) -> bool:
    if isinstance(pk, KeyPair):
        pk = pk.public
    _check_signature_params(pk.params)
    n = pk.params.n
    if not (1 <= sig.R < n and 1 <= sig.s < n):
        return False
    e = hash_to_scalar(message, n)
    s_inv = pow(sig.s, -1, n)
    u1 = e * s_inv % n
    u2 = sig.R * s_inv % n
    v = mul(generator_power(pk.params, u1), power(pk.h, u2))
    return recover_exponent(to_numeric(v)) % n == sig.R
