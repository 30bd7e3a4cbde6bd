"""Two-party DH key exchange over TCP.

Line protocol (UTF-8, LF-terminated):

    client -> HELLO circlelog/1
    client -> PARAMS n=<dec> g=<dec>
    server -> OK                      (or ERR PARAMS, then close)
    client -> A=<dec>
    server -> B=<dec>
    client -> CONFIRM <hex>
    server -> CONFIRM <hex>

where <hex> is the lowercase SHA-256 of the ASCII decimal of the shared
exponent S.k. Both sides log the session as a transcript with C:/S: line
prefixes in protocol order; with fixed seeds the transcripts are
byte-identical on both ends.
"""

from __future__ import annotations

import hashlib
import socket
from dataclasses import dataclass
from random import Random
from typing import Callable

from .errors import ParamsMismatch, ProtocolError
from .group import ExactElement, GroupParams, element, power
from .protocols import generator_power, random_scalar

HELLO = "HELLO circlelog/1"


@dataclass(frozen=True)
class SessionResult:
    shared: ExactElement
    confirm: str
    transcript: str


def confirm_digest(shared: ExactElement) -> str:
    return hashlib.sha256(str(shared.k).encode("ascii")).hexdigest()


def _send(stream, transcript: list[str], prefix: str, line: str) -> None:
    stream.write(line + "\n")
    stream.flush()
    transcript.append(f"{prefix}{line}")


def _recv(stream, transcript: list[str], prefix: str, expected: str) -> str:
    raw = stream.readline()
    if not raw.endswith("\n"):
        raise ProtocolError(f"connection closed while waiting for {expected}")
    line = raw[:-1]
    transcript.append(f"{prefix}{line}")
    return line


def _parse_decimal(line: str, pattern: str, expected: str) -> int:
    if not line.startswith(pattern):
        raise ProtocolError(f"expected {expected}, got {line!r}")
    try:
        return int(line[len(pattern):], 10)
    except ValueError:
        raise ProtocolError(f"expected {expected}, got {line!r}") from None


def _serve_session(stream, params: GroupParams, rng: Random) -> SessionResult:
    transcript: list[str] = []
    hello = _recv(stream, transcript, "C: ", "HELLO")
    if hello != HELLO:
        raise ProtocolError(f"expected {HELLO!r}, got {hello!r}")
    line = _recv(stream, transcript, "C: ", "PARAMS")
    if line != f"PARAMS n={params.n} g={params.g}":
        _send(stream, transcript, "S: ", "ERR PARAMS")
        raise ParamsMismatch(f"client parameters disagree: {line!r}")
    _send(stream, transcript, "S: ", "OK")

    a_pub = _parse_decimal(_recv(stream, transcript, "C: ", "A"), "A=", "A=<decimal>")
    b = random_scalar(rng, params.n)
    _send(stream, transcript, "S: ", f"B={generator_power(params, b).k}")
    shared = power(element(params, a_pub), b)
    confirm = confirm_digest(shared)

    their = _recv(stream, transcript, "C: ", "CONFIRM")
    _send(stream, transcript, "S: ", f"CONFIRM {confirm}")
    if their != f"CONFIRM {confirm}":
        raise ProtocolError(f"confirmation mismatch: {their!r}")
    return SessionResult(shared, confirm, "\n".join(transcript) + "\n")


def dh_serve(
    port: int,
    params: GroupParams,
    rng: Random,
    host: str = "127.0.0.1",
    on_listen: Callable[[int], None] | None = None,
) -> SessionResult:
    """Serve one DH session; returns after the session completes.

    ``on_listen`` receives the bound port (useful with port=0).
    """
    with socket.create_server((host, port)) as server:
        if on_listen is not None:
            on_listen(server.getsockname()[1])
        conn, _ = server.accept()
        with conn, conn.makefile("rw", encoding="utf-8", newline="\n") as stream:
            return _serve_session(stream, params, rng)


def dh_connect(host: str, port: int, params: GroupParams, rng: Random) -> SessionResult:
    with socket.create_connection((host, port)) as sock:
        with sock.makefile("rw", encoding="utf-8", newline="\n") as stream:
            transcript: list[str] = []
            _send(stream, transcript, "C: ", HELLO)
            _send(stream, transcript, "C: ", f"PARAMS n={params.n} g={params.g}")
            line = _recv(stream, transcript, "S: ", "OK")
            if line == "ERR PARAMS":
                raise ParamsMismatch("server rejected parameters")
            if line != "OK":
                raise ProtocolError(f"expected OK, got {line!r}")

            a = random_scalar(rng, params.n)
            _send(stream, transcript, "C: ", f"A={generator_power(params, a).k}")
            b_pub = _parse_decimal(
                _recv(stream, transcript, "S: ", "B"), "B=", "B=<decimal>"
            )
            shared = power(element(params, b_pub), a)
            confirm = confirm_digest(shared)
            _send(stream, transcript, "C: ", f"CONFIRM {confirm}")
            their = _recv(stream, transcript, "S: ", "CONFIRM")
            if their != f"CONFIRM {confirm}":
                raise ProtocolError(f"confirmation mismatch: {their!r}")
            return SessionResult(shared, confirm, "\n".join(transcript) + "\n")
