"""Loopback DH sessions over TCP."""

import socket
import threading
from pathlib import Path
from random import Random

import pytest

from circlelog import ParamsMismatch, ProtocolError, make_params
from circlelog.wire import dh_connect, dh_serve

GOLDEN = Path(__file__).parent / "data" / "dh_transcript.golden"

PARAMS = make_params(101, 2, 16)
SERVER_SEED = 2024
CLIENT_SEED = 4202


def serve_in_thread(params, seed):
    """Start a one-session server on an ephemeral port; returns (port, result holder)."""
    ready = threading.Event()
    box = {}

    def on_listen(port):
        box["port"] = port
        ready.set()

    def run():
        try:
            box["result"] = dh_serve(0, params, Random(seed), on_listen=on_listen)
        except Exception as exc:  # surfaced by the test
            box["error"] = exc
            ready.set()

    thread = threading.Thread(target=run, daemon=True)
    thread.start()
    assert ready.wait(5)
    return box, thread


def test_loopback_session_agrees():
    box, thread = serve_in_thread(PARAMS, SERVER_SEED)
    client = dh_connect("127.0.0.1", box["port"], PARAMS, Random(CLIENT_SEED))
    thread.join(5)
    server = box["result"]
    assert server.shared == client.shared
    assert server.confirm == client.confirm
    assert server.transcript == client.transcript


def test_transcript_matches_golden():
    box, thread = serve_in_thread(PARAMS, SERVER_SEED)
    client = dh_connect("127.0.0.1", box["port"], PARAMS, Random(CLIENT_SEED))
    thread.join(5)
    assert client.transcript.encode("utf-8") == GOLDEN.read_bytes()


def test_params_mismatch_rejected():
    box, thread = serve_in_thread(PARAMS, SERVER_SEED)
    with pytest.raises(ParamsMismatch):
        dh_connect("127.0.0.1", box["port"], make_params(103, 2, 16), Random(1))
    thread.join(5)
    assert isinstance(box.get("error"), ParamsMismatch)


def test_truncated_stream_names_expected_message():
    box, thread = serve_in_thread(PARAMS, SERVER_SEED)
    with socket.create_connection(("127.0.0.1", box["port"])) as sock:
        sock.sendall(b"HELLO circlelog/1\n")
    thread.join(5)
    err = box.get("error")
    assert isinstance(err, ProtocolError)
    assert "PARAMS" in str(err)


def test_garbage_hello_rejected():
    box, thread = serve_in_thread(PARAMS, SERVER_SEED)
    with socket.create_connection(("127.0.0.1", box["port"])) as sock:
        sock.sendall(b"EHLO wrong/9\nPARAMS n=101 g=2\n")
    thread.join(5)
    assert isinstance(box.get("error"), ProtocolError)
