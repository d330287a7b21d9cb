"""Independent oracle for the frozen values in the unit tests.

Exact arithmetic through sympy; run with `python3 tests/oracle/oracle.py`.
"""
import numpy as np
import sympy as sp


def S(n):
    return sp.Matrix(n, n, lambda i, j: 1 if i == j + 1 else 0)


def J(n):
    return sp.Matrix(n, n, lambda i, j: 1 if i + j == n - 1 else 0)


def Zalt(n):
    return sp.Matrix(n, n, lambda i, j: (-1) ** j if i == j + 1 else 0)


def nab(A, Z, N):
    return (A - Z * A * N).rank()


def dl(A, Z, N):
    return (Z * A - A * N).rank()


def toeplitz(col, row):
    return sp.Matrix(len(col), len(row), lambda i, j: col[i - j] if i >= j else row[j - i])


def pinv(A):
    return A.pinv()


ALT = sp.Matrix([[2, -2, -2, 1, 1], [1, -2, -2, 2, 1], [1, 1, 2, -2, -2],
                 [4, -1, 1, -2, -2], [-8, 4, 1, 1, 2]])

print("== alternate-toeplitz regularized, eta = 1")
Z = Zalt(5)
N = -Z.T
R = (ALT + sp.eye(5)).inv()
print("nabla lhs", nab(R, N, Z), "dA", nab(ALT, Z, N), "dI", nab(sp.eye(5), Z, N))
print("delta lhs", dl(R, N, Z), "dA", dl(ALT, Z, N), "dI", dl(sp.eye(5), Z, N))

print("== schur 8x8 toeplitz split 4+4")
M = toeplitz([5, 1, -2, 3, 0, 4, -1, 2], [5, -3, 1, 2, -4, 1, 3, -2])
assert M.rank() == 8 and M[:4, :4].rank() == 4
A, B, C, D = M[:4, :4], M[:4, 4:], M[4:, :4], M[4:, 4:]
Sc = D - C * A.inv() * B
Zb = sp.diag(S(4), S(4))
Nb = sp.diag(S(4).T, S(4).T)
print("nabla", nab(Sc, S(4), S(4).T), "<=", nab(M, Zb, Nb))
print("delta", dl(Sc, S(4), S(4).T), "<=", dl(M, Zb, Nb))

print("== product-rect 5x7 * 7x4")
Ar = sp.Matrix(5, 7, lambda i, j: ((3 * i + 5 * j) % 7) - 3)
Br = sp.Matrix(7, 4, lambda i, j: ((2 * i + 3 * j + 1) % 5) - 2)
ZA, NA, ZB, NB = S(5), S(7).T, S(7), J(4)
print("lhs", dl(Ar * Br, ZA, NB), "dA", dl(Ar, ZA, NA), "dI", dl(sp.eye(7), NA, ZB), "dB", dl(Br, ZB, NB))

print("== full-rank pinv, tall toeplitz 8x5, Z=N=S")
T = toeplitz([3, 1, -2, 4, 0, 1, -1, 2], [3, 2, -1, 5, 1])
assert T.rank() == 5
Bf = (T.T * T).inv() * T.T
print("first lhs", dl(Bf, S(5), S(8)), "dA", dl(T, S(8), S(5)), "dAt", dl(T.T, S(5), S(8)))
print("second lhs", dl(Bf, S(5), S(8).T), "dI", dl(sp.eye(8), S(8).T, S(8)))

print("== exact pinv of a rank-2 3x4 matrix")
P = sp.Matrix([[1, 2, 3, 4], [2, 4, 6, 8], [1, 0, 1, 0]])
print(pinv(P))

print("== singular values")
X = np.array([[4.0, 1, -2], [1, 3, 0], [-2, 0, 5], [1, 1, 1]])
print(repr(np.linalg.svd(X, compute_uv=False)))

print("== diagonal inverse duality, Z=N=S")
Dg = sp.diag(2, -1, 3, 5)
print("delta", dl(Dg, S(4), S(4)), dl(Dg.inv(), S(4), S(4)), "nabla", nab(Dg, S(4), S(4)), nab(Dg.inv(), S(4), S(4)))

print("== T = S counterexample to the Toeplitz delta pinv bound")
Sn = S(5)
print("dD[S,S]{S}", dl(Sn, Sn, Sn), "dD[S,S]{S^+}", dl(pinv(Sn), Sn, Sn))
H = J(5) * Sn
print("hankel J*S: dD[S,St]{H}", dl(H, Sn, Sn.T), "dD[St,S]{H^+}", dl(pinv(H), Sn.T, Sn))

print("== rank-pinv counterexample, A = e1 v^T, Z = St, N generic")
A = sp.zeros(4, 4)
A[0, :] = sp.Matrix([[1, 2, -1, 3]])
Zc = S(4).T
Nc = sp.Matrix([[0, 1, 2, 0], [1, -1, 0, 2], [0, 3, 1, 1], [2, 0, -1, 1]])
print("r", A.rank(), "dN[Z,N]{A}", nab(A, Zc, Nc), "dN[N,Z]{A+}", nab(pinv(A), Nc, Zc))

print("== non-closure: A P-symmetric, A A^T not")
Tn = toeplitz([1, 2, 0, -1], [1, 3, 1, 2])
Jn = J(4)
print("JTJ=T^T", Jn * Tn * Jn == Tn.T, "J(TT^T)J = (TT^T)^T", Jn * Tn * Tn.T * Jn == (Tn * Tn.T).T)
