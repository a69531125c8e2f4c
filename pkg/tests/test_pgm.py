import numpy as np
import pytest

from wavescreen.pgm import PgmError, read_pgm, write_pgm


def test_p2_parse_spec_example():
    img = read_pgm(b"P2\n2 2\n255\n0 128 255 64")
    np.testing.assert_array_equal(img, [[0.0, 128.0], [255.0, 64.0]])


def test_p2_comments_and_whitespace():
    data = b"P2\n# a comment\n 2  2 \n255\n0 1\n2 3\n"
    np.testing.assert_array_equal(read_pgm(data), [[0, 1], [2, 3]])


@pytest.mark.parametrize("variant", ["P2", "P5"])
def test_write_read_round_trip(variant):
    rng = np.random.default_rng(0)
    img = np.floor(rng.uniform(0, 256, size=(5, 7)))
    np.testing.assert_array_equal(read_pgm(write_pgm(img, variant)), img)


def test_write_clamps_and_rounds():
    img = np.array([[-3.2, 254.7], [300.0, 1.4]])
    out = read_pgm(write_pgm(img, "P2"))
    np.testing.assert_array_equal(out, [[0.0, 255.0], [255.0, 1.0]])


def test_p5_truncated_payload():
    with pytest.raises(PgmError, match="truncated"):
        read_pgm(b"P5\n2 2\n255\n\x00\x01\x02")


def test_p2_truncated_payload():
    with pytest.raises(PgmError, match="truncated"):
        read_pgm(b"P2\n2 2\n255\n0 1 2")


def test_maxval_must_be_255():
    with pytest.raises(PgmError, match="maxval"):
        read_pgm(b"P2\n2 2\n65535\n0 1 2 3")


def test_unknown_magic():
    with pytest.raises(PgmError, match="magic"):
        read_pgm(b"P6\n2 2\n255\n" + bytes(12))


def test_malformed_header():
    with pytest.raises(PgmError, match="header"):
        read_pgm(b"P2\n2")
    with pytest.raises(PgmError, match="header"):
        read_pgm(b"P2\nx y\n255\n0")


def test_extra_payload_rejected():
    with pytest.raises(PgmError, match="extra|trailing"):
        read_pgm(b"P2\n2 2\n255\n0 1 2 3 4")
    with pytest.raises(PgmError, match="trailing"):
        read_pgm(b"P5\n2 2\n255\n" + bytes(5))


def test_non_square_orientation():
    # header is "width height"; payload is row-major
    img = read_pgm(b"P2\n3 2\n255\n1 2 3 4 5 6")
    assert img.shape == (2, 3)
    np.testing.assert_array_equal(img, [[1, 2, 3], [4, 5, 6]])


def test_p5_binary_values():
    data = b"P5\n2 2\n255\n" + bytes([0, 128, 255, 64])
    np.testing.assert_array_equal(read_pgm(data), [[0, 128], [255, 64]])
