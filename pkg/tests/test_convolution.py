from series.convolution import karatsuba, multiply, schoolbook


def _naive(a, b, n):
    out = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < n:
                out[i + j] += x * y
    return out


def test_schoolbook_truncates():
    assert schoolbook([1, 1], [1, -1], 3, 0) == [1, 0, -1]
    assert schoolbook([1, 2, 3], [4, 5, 6], 2, 0) == [4, 13]


def test_karatsuba_matches_naive(rng):
    for length in (1, 2, 3, 7, 16, 33, 50):
        a = [rng.randint(-50, 50) for _ in range(length)]
        b = [rng.randint(-50, 50) for _ in range(length)]
        assert karatsuba(a, b, length, 0, 4) == _naive(a, b, length)


def test_karatsuba_uneven_lengths(rng):
    a = [rng.randint(-9, 9) for _ in range(40)]
    b = [rng.randint(-9, 9) for _ in range(13)]
    assert karatsuba(a, b, 40, 0, 4) == _naive(a, b, 40)


def test_multiply_dispatch_agrees(rng):
    a = [rng.randint(-9, 9) for _ in range(80)]
    b = [rng.randint(-9, 9) for _ in range(80)]
    expected = _naive(a, b, 80)
    assert multiply(a, b, 80, 0) == expected
    assert multiply(a, b, 80, 0, threshold=8) == expected


def test_multiply_sparse_operand():
    sparse = [0] * 100
    sparse[0], sparse[50] = 1, -1
    dense = list(range(100))
    result = multiply(sparse, dense, 100, 0, threshold=8)
    assert result == _naive(sparse, dense, 100)
