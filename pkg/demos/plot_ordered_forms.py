"""
Ordered forms and decoding equivalence
======================================

Two channels decode every n-block code the same way exactly when the
ordered forms of their transition matrices agree. This walks through the
three criteria that exist for two-bit words and a pair of channels that
agree up to seven bits but not eight.
"""

from fractions import Fraction

from bacequiv import ChannelParams, build_matrix, equivalent, ordered_form, separation_order

# For n = 2 there are three criteria: the open triangle, the Z-channel axis
# p = 0 and the BSC diagonal p = q.
for label, ch in [("interior", ChannelParams("1/10", "1/5")),
                  ("Z-channel", ChannelParams(0, "1/3")),
                  ("BSC", ChannelParams("1/4", "1/4"))]:
    print(label, ch)
    print(ordered_form(build_matrix(2, ch)))

# The matrix itself is exact; rows of the same word share Hamming weight.
m = build_matrix(2, ChannelParams("1/10", "1/5"))
for row in m.to_fractions():
    print(["%s" % v for v in row])

# BAC(1/5, 2/5) and BAC(1/10, 3/10) look alike for short words ...
a = ChannelParams(Fraction(1, 5), Fraction(2, 5))
b = ChannelParams(Fraction(1, 10), Fraction(3, 10))
print("7-equivalent:", equivalent(a, b, 7))
print("8-equivalent:", equivalent(a, b, 8))

# ... and the first order that tells them apart is found without matrices.
print("separated at order", separation_order(a, b))
