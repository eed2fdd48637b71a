"""Sum rule R(m,n) <= R(m-1,n) + R(m,n-1), with the parity gain.

The parity gain holds with upper bounds a >= R(m-1,n), b >= R(m,n-1) in place
of the exact values. Suppose a graph of order a + b - 1 has no K_m and no
independent n-set. Every vertex then has degree exactly a - 1 (at most a - 1
neighbours, at most b - 1 non-neighbours), so when a and b are both even the
order is odd while every degree is odd, contradicting the handshake lemma.
"""


def gg_upper(u_left: int, u_right: int) -> int:
    if u_left < 1 or u_right < 1:
        raise ValueError("upper bounds must be >= 1")
    total = u_left + u_right
    if u_left % 2 == 0 and u_right % 2 == 0:
        return total - 1
    return total
