"""Expected values for the six-dimensional hypersurface

    x_1^5 z + x_2^5 z + x_3^6 + ... + x_7^6 = 0 in projective 7-space

with a (5,5,6,6,6,6,6) point at the origin and five (2,2,6,6,6,6,6) points at infinity.
"""

from stringye.algebra import BiPoly, StringyRational, parse_bipoly

Q = BiPoly.q()

A_INNER = parse_bipoly(
    "5*(uv)^10 + (uv)^9 + 7*(uv)^8 + 3*(uv)^7 + 9*(uv)^6 + 4*(uv)^5 + 8*(uv)^4 + 2*(uv)^3 + 6*(uv)^2 + uv + 1"
    " - 5*u^9*v^6 - 5*u^6*v^9 - 255*u^8*v^7 - 255*u^7*v^8 - 5*u^8*v^5 - 5*u^5*v^8"
    " - 255*u^7*v^6 - 255*u^6*v^7 - 5*u^7*v^4 - 5*u^4*v^7 - 255*u^6*v^5 - 255*u^5*v^6"
    " - 5*u^6*v^3 - 5*u^3*v^6 - 255*u^5*v^4 - 255*u^4*v^5"
    " - 20*u^4*v - 20*u*v^4 - 1020*u^3*v^2 - 1020*u^2*v^3"
)
A = StringyRational((Q - 1) * A_INNER, (7,))

B_INNER = parse_bipoly("5*(uv)^5 + (uv)^4 + (uv)^3 + (uv)^2 + uv + 1 - 5*u^4*v - 5*u*v^4 - 255*u^3*v^2 - 255*u^2*v^3")
B = StringyRational((Q - 1) * B_INNER, (5,))

C = parse_bipoly("(uv)^5 + (uv)^4 + (uv)^3 + (uv)^2 + uv - 4 - 5*u^5*v^2 - 5*u^2*v^5 - 255*u^4*v^3 - 255*u^3*v^4")
D = parse_bipoly("(uv)^6 - 1 - (uv - 1)*(20*u^4*v + 20*u*v^4 + 1020*u^3*v^2 + 1020*u^2*v^3)")

E_ST_NUMERATOR = parse_bipoly(
    "(uv)^18 + (uv)^17 + 6*(uv)^16 - 3*(uv)^15 + 7*(uv)^14 + 21*(uv)^13 - 20*(uv)^12 - 12*(uv)^11"
    " + 6*(uv)^10 - 14*(uv)^9 + 6*(uv)^8 - 12*(uv)^7 - 20*(uv)^6 + 21*(uv)^5 + 7*(uv)^4 - 3*(uv)^3"
    " + 6*(uv)^2 + uv + 1"
    " - 25*(u^17*v^14 + u^14*v^17 + u^4*v + u*v^4)"
    " - 1275*(u^16*v^15 + u^15*v^16 + u^3*v^2 + u^2*v^3)"
    " + 20*(u^16*v^13 + u^13*v^16 + u^5*v^2 + u^2*v^5)"
    " + 1020*(u^15*v^14 + u^14*v^15 + u^4*v^3 + u^3*v^4)"
    " - 5*(u^15*v^12 + u^12*v^15 + u^6*v^3 + u^3*v^6)"
    " - 255*(u^14*v^13 + u^13*v^14 + u^5*v^4 + u^4*v^5)"
    " + 10*(u^11*v^8 + u^8*v^11 + u^10*v^7 + u^7*v^10)"
    " + 510*(u^10*v^9 + u^9*v^10 + u^9*v^8 + u^8*v^9)"
)
E_ST = StringyRational(E_ST_NUMERATOR, (5, 7))

P_ORIGIN = {
    frozenset(): parse_bipoly("1"),
    frozenset({1, 2}): parse_bipoly("(uv)^6 + (uv)^5 + (uv)^4 + (uv)^3"),
    frozenset({3, 4, 5, 6, 7}): parse_bipoly("(uv)^10 + (uv)^8 + (uv)^6 + (uv)^4 + (uv)^2"),
}

H_M_EMPTY = parse_bipoly("(uv)^6 - (uv - 1)*(20*u^4*v + 20*u*v^4 + 1020*u^3*v^2 + 1020*u^2*v^3)")
H_M_12 = parse_bipoly("(uv)^4 - (uv - 1)*(5*u^3 + 5*v^3 + 255*u^2*v + 255*u*v^2)")
H_M_34567 = parse_bipoly("5*uv - 4")

FERMAT_3_6 = parse_bipoly("(uv)^3 + (uv)^2 + uv + 1 - 5*u^3 - 5*v^3 - 255*u^2*v - 255*u*v^2")
