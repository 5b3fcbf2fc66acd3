"""Published reference values for the divergence tables and the
mixing-bound constant pipeline.

These are the values the table engines are validated against.  E_max
entries are 6-decimal roundings; counts are exact.  The *_PUBLISHED_*
constants record the intermediate decimal bounds used in the published
derivations of the mixing constants (upper bounds on E_max, lower
bounds on the contraction denominators); the bounds module recomputes
everything exactly and reports both.
"""

# (k, d, labels) -> (omega_block, omega_boundary, e_max 6-decimal string)
TYPE1_ROWS = {
    (2, 3, (1,)): (15, 27, "0.727273"),
    (2, 4, (1,)): (35, 81, "0.769231"),
    (2, 5, (1,)): (83, 243, "0.790323"),
    (2, 6, (1,)): (199, 729, "0.798658"),
    (2, 7, (1,)): (479, 2187, "0.802228"),
    (2, 8, (1,)): (1155, 6561, "0.803695"),
    (2, 9, (1,)): (2787, 19683, "0.804306"),
    (2, 10, (1,)): (6727, 59049, "0.804559"),
    (2, 3, (1, 2)): (15, 9, "1.327273"),
    (2, 4, (1, 2)): (35, 27, "1.384615"),
    (2, 4, (1, 3)): (35, 27, "1.435897"),
    (2, 5, (1, 2)): (83, 81, "1.415323"),
    (2, 5, (1, 3)): (83, 81, "1.540323"),
    (2, 6, (1, 2)): (199, 243, "1.426863"),
    (2, 6, (1, 3)): (199, 243, "1.574777"),
    (2, 6, (1, 4)): (199, 243, "1.552082"),
    (2, 7, (1, 2)): (479, 729, "1.431858"),
    (2, 7, (1, 3)): (479, 729, "1.591048"),
    (2, 7, (1, 4)): (479, 729, "1.579371"),
    (2, 8, (1, 2)): (1155, 2187, "1.433892"),
    (2, 8, (1, 3)): (1155, 2187, "1.597510"),
    (2, 8, (1, 4)): (1155, 2187, "1.592294"),
    (2, 8, (1, 5)): (1155, 2187, "1.586912"),
    (2, 9, (1, 2)): (2787, 6561, "1.434741"),
    (2, 9, (1, 3)): (2787, 6561, "1.600246"),
    (2, 9, (1, 4)): (2787, 6561, "1.597410"),
    (2, 9, (1, 5)): (2787, 6561, "1.598880"),
    (2, 10, (1, 2)): (6727, 19683, "1.435092"),
    (2, 10, (1, 3)): (6727, 19683, "1.601372"),
    (2, 10, (1, 4)): (6727, 19683, "1.599577"),
    (2, 10, (1, 5)): (6727, 19683, "1.603594"),
    (2, 10, (1, 6)): (6727, 19683, "1.600502"),
    (2, 3, (1, 2, 3)): (15, 3, "1.500000"),
    (2, 4, (1, 2, 3)): (35, 9, "1.869231"),
    (2, 5, (1, 2, 3)): (83, 27, "1.905707"),
    (2, 5, (1, 2, 4)): (83, 27, "2.051192"),
    (2, 6, (1, 2, 3)): (199, 81, "1.923658"),
    (2, 6, (1, 2, 4)): (199, 81, "2.150510"),
    (2, 6, (1, 3, 5)): (199, 81, "2.150510"),
    (2, 7, (1, 2, 3)): (479, 243, "1.930434"),
    (2, 7, (1, 2, 4)): (479, 243, "2.189825"),
    (2, 7, (1, 2, 5)): (479, 243, "2.159796"),
    (2, 7, (1, 3, 5)): (479, 243, "2.235299"),
    (2, 8, (1, 2, 3)): (1155, 729, "1.933325"),
    (2, 8, (1, 2, 4)): (1155, 729, "2.206921"),
    (2, 8, (1, 2, 5)): (1155, 729, "2.195117"),
    (2, 8, (1, 3, 5)): (1155, 729, "2.264221"),
    (2, 8, (1, 3, 6)): (1155, 729, "2.315401"),
    (2, 9, (1, 2, 3)): (2787, 2187, "1.935014"),
    (2, 9, (1, 2, 4)): (2787, 2187, "2.213945"),
    (2, 9, (1, 2, 5)): (2787, 2187, "2.209698"),
    (2, 9, (1, 2, 6)): (2787, 2187, "2.207776"),
    (2, 9, (1, 3, 5)): (2787, 2187, "2.277630"),
    (2, 9, (1, 3, 6)): (2787, 2187, "2.342016"),
    (2, 9, (1, 4, 7)): (2787, 2187, "2.334910"),
    (2, 10, (1, 2, 3)): (6727, 6561, "1.936494"),
    (2, 10, (1, 2, 4)): (6727, 6561, "2.216879"),
    (2, 10, (1, 2, 5)): (6727, 6561, "2.215781"),
    (2, 10, (1, 2, 6)): (6727, 6561, "2.222741"),
    (2, 10, (1, 3, 5)): (6727, 6561, "2.282993"),
    (2, 10, (1, 3, 6)): (6727, 6561, "2.354501"),
    (2, 10, (1, 3, 7)): (6727, 6561, "2.367241"),
    (2, 10, (1, 4, 7)): (6727, 6561, "2.363205"),
    (3, 3, (1,)): (22, 64, "1.600000"),
    (3, 4, (1,)): (54, 256, "1.789474"),
    (3, 5, (1,)): (134, 1024, "1.804348"),
    (3, 6, (1,)): (340, 4096, "1.831905"),
    (3, 7, (1,)): (872, 16384, "1.840096"),
    (3, 8, (1,)): (2254, 65536, "1.845752"),
    (3, 9, (1,)): (5854, 262144, "1.847792"),
    (3, 10, (1,)): (15250, 1048576, "1.848706"),
    (3, 3, (1, 2)): (22, 16, "2.000000"),
    (3, 4, (1, 2)): (54, 64, "2.142857"),
    (3, 4, (1, 3)): (54, 64, "2.000000"),
    (3, 5, (1, 2)): (134, 256, "2.546154"),
    (3, 5, (1, 3)): (134, 256, "2.615385"),
    (3, 6, (1, 2)): (340, 1024, "2.577465"),
    (3, 6, (1, 3)): (340, 1024, "2.826087"),
    (3, 6, (1, 4)): (340, 1024, "3.216327"),
    (3, 7, (1, 2)): (872, 4096, "2.624362"),
    (3, 7, (1, 3)): (872, 4096, "2.818584"),
    (3, 7, (1, 4)): (872, 4096, "3.324534"),
    (3, 8, (1, 2)): (2254, 16384, "2.635011"),
    (3, 8, (1, 3)): (2254, 16384, "2.856485"),
    (3, 8, (1, 4)): (2254, 16384, "3.403828"),
    (3, 8, (1, 5)): (2254, 16384, "3.633238"),
    (3, 9, (1, 2)): (5854, 65536, "2.641197"),
    (3, 9, (1, 3)): (5854, 65536, "2.863505"),
    (3, 9, (1, 4)): (5854, 65536, "3.426333"),
    (3, 9, (1, 5)): (5854, 65536, "3.626901"),
    (3, 10, (1, 2)): (15250, 262144, "2.643553"),
    (3, 10, (1, 3)): (15250, 262144, "2.868846"),
    (3, 10, (1, 4)): (15250, 262144, "3.438075"),
    (3, 10, (1, 5)): (15250, 262144, "3.651213"),
    (3, 10, (1, 6)): (15250, 262144, "3.620821"),
    (3, 3, (1, 2, 3)): (22, 4, "3.000000"),
    (3, 4, (1, 2, 3)): (54, 16, "2.964286"),
    (3, 5, (1, 2, 3)): (134, 64, "2.966667"),
    (3, 5, (1, 2, 4)): (134, 64, "2.982759"),
    (3, 6, (1, 2, 3)): (340, 256, "3.110112"),
    (3, 6, (1, 2, 4)): (340, 256, "3.200000"),
    (3, 6, (1, 3, 5)): (340, 256, "3.000000"),
    (3, 7, (1, 2, 3)): (872, 1024, "3.164596"),
    (3, 7, (1, 2, 4)): (872, 1024, "3.525963"),
    (3, 7, (1, 2, 5)): (872, 1024, "3.871287"),
    (3, 7, (1, 3, 5)): (872, 1024, "3.617647"),
    (3, 8, (1, 2, 3)): (2254, 4096, "3.194189"),
    (3, 8, (1, 2, 4)): (2254, 4096, "3.535367"),
    (3, 8, (1, 2, 5)): (2254, 4096, "4.042553"),
    (3, 8, (1, 3, 5)): (2254, 4096, "3.831169"),
    (3, 8, (1, 3, 6)): (2254, 4096, "4.222115"),
    (3, 9, (1, 2, 3)): (5854, 16384, "3.202434"),
    (3, 9, (1, 2, 4)): (5854, 16384, "3.578054"),
    (3, 9, (1, 2, 5)): (5854, 16384, "4.114039"),
    (3, 9, (1, 2, 6)): (5854, 16384, "4.387895"),
    (3, 9, (1, 3, 5)): (5854, 16384, "3.820580"),
    (3, 9, (1, 3, 6)): (5854, 16384, "4.332220"),
    (3, 9, (1, 4, 7)): (5854, 16384, "4.846281"),
    (3, 10, (1, 2, 3)): (15250, 65536, "3.206722"),
    (3, 10, (1, 2, 4)): (15250, 65536, "3.585695"),
    (3, 10, (1, 2, 5)): (15250, 65536, "4.139175"),
    (3, 10, (1, 2, 6)): (15250, 65536, "4.390973"),
    (3, 10, (1, 3, 5)): (15250, 65536, "3.859528"),
    (3, 10, (1, 3, 6)): (15250, 65536, "4.408656"),
    (3, 10, (1, 3, 7)): (15250, 65536, "4.648191"),
    (3, 10, (1, 4, 7)): (15250, 65536, "5.051252"),
}

# (k, labels) -> (omega_block, omega_boundary, e_max 6-decimal string)
TYPE2_ROWS = {
    (2, (1,)): (1393, 59049, "0.706599"),
    (2, (2,)): (1393, 59049, "0.782333"),
    (2, (3,)): (1393, 59049, "0.792046"),
    (2, (4,)): (1393, 59049, "0.797591"),
    (2, (1, 2)): (1393, 19683, "1.412481"),
    (2, (1, 3)): (1393, 19683, "1.411765"),
    (2, (1, 4)): (1393, 19683, "1.477771"),
    (2, (1, 5)): (1393, 19683, "1.491765"),
    (2, (1, 6)): (1393, 19683, "1.493956"),
    (2, (1, 7)): (1393, 19683, "1.486392"),
    (2, (1, 8)): (1393, 19683, "1.412481"),
    (2, (2, 3)): (1393, 19683, "1.411765"),
    (2, (2, 4)): (1393, 19683, "1.473715"),
    (2, (2, 5)): (1393, 19683, "1.541176"),
    (2, (2, 6)): (1393, 19683, "1.557661"),
    (2, (2, 7)): (1393, 19683, "1.557944"),
    (2, (3, 4)): (1393, 19683, "1.411765"),
    (2, (3, 5)): (1393, 19683, "1.540578"),
    (2, (3, 6)): (1393, 19683, "1.544729"),
    (2, (4, 5)): (1393, 19683, "1.417639"),
    (2, (1, 2, 3)): (1393, 6561, "1.911765"),
    (2, (1, 2, 4)): (1393, 6561, "2.065098"),
    (2, (1, 2, 5)): (1393, 6561, "2.152505"),
    (2, (1, 2, 6)): (1393, 6561, "2.180995"),
    (2, (1, 2, 7)): (1393, 6561, "2.185449"),
    (2, (1, 2, 8)): (1393, 6561, "2.115907"),
    (2, (1, 3, 4)): (1393, 6561, "2.011765"),
    (2, (1, 3, 5)): (1393, 6561, "2.138765"),
    (2, (1, 3, 6)): (1393, 6561, "2.161765"),
    (2, (1, 3, 7)): (1393, 6561, "2.176471"),
    (2, (1, 3, 8)): (1393, 6561, "2.113422"),
    (2, (1, 4, 5)): (1393, 6561, "2.085655"),
    (2, (1, 4, 6)): (1393, 6561, "2.212074"),
    (2, (1, 4, 7)): (1393, 6561, "2.219646"),
    (2, (1, 4, 8)): (1393, 6561, "2.171541"),
    (2, (1, 5, 6)): (1393, 6561, "2.101420"),
    (2, (1, 5, 7)): (1393, 6561, "2.164148"),
    (2, (1, 5, 8)): (1393, 6561, "2.171541"),
    (2, (1, 6, 7)): (1393, 6561, "2.111765"),
    (2, (1, 6, 8)): (1393, 6561, "2.113422"),
    (2, (1, 7, 8)): (1393, 6561, "2.115907"),
    (2, (2, 3, 4)): (1393, 6561, "1.911765"),
    (2, (2, 3, 5)): (1393, 6561, "2.138220"),
    (2, (2, 3, 6)): (1393, 6561, "2.150153"),
    (2, (2, 3, 7)): (1393, 6561, "2.171258"),
    (2, (2, 4, 5)): (1393, 6561, "2.085655"),
    (2, (2, 4, 6)): (1393, 6561, "2.203284"),
    (2, (2, 4, 7)): (1393, 6561, "2.213514"),
    (2, (2, 5, 6)): (1393, 6561, "2.139037"),
    (2, (2, 5, 7)): (1393, 6561, "2.213514"),
    (2, (2, 6, 7)): (1393, 6561, "2.171258"),
    (2, (3, 4, 5)): (1393, 6561, "1.917639"),
    (2, (3, 4, 6)): (1393, 6561, "2.148560"),
    (2, (3, 5, 6)): (1393, 6561, "2.148560"),
    (3, (1,)): (3194, 1048576, "1.190238"),
    (3, (2,)): (3194, 1048576, "1.704828"),
    (3, (3,)): (3194, 1048576, "1.814364"),
    (3, (4,)): (3194, 1048576, "1.826600"),
    (3, (1, 2)): (3194, 262144, "1.834042"),
    (3, (1, 3)): (3194, 262144, "2.169631"),
    (3, (1, 4)): (3194, 262144, "2.726797"),
    (3, (1, 5)): (3194, 262144, "2.971795"),
    (3, (1, 6)): (3194, 262144, "2.961434"),
    (3, (1, 7)): (3194, 262144, "2.881866"),
    (3, (1, 8)): (3194, 262144, "2.374306"),
    (3, (2, 3)): (3194, 262144, "2.417989"),
    (3, (2, 4)): (3194, 262144, "2.702039"),
    (3, (2, 5)): (3194, 262144, "3.341018"),
    (3, (2, 6)): (3194, 262144, "3.484726"),
    (3, (2, 7)): (3194, 262144, "3.368019"),
    (3, (3, 4)): (3194, 262144, "2.604027"),
    (3, (3, 5)): (3194, 262144, "2.822416"),
    (3, (3, 6)): (3194, 262144, "3.324534"),
    (3, (4, 5)): (3194, 262144, "2.596933"),
    (3, (1, 2, 3)): (3194, 65536, "2.470549"),
    (3, (1, 2, 4)): (3194, 65536, "2.825476"),
    (3, (1, 2, 5)): (3194, 65536, "3.323843"),
    (3, (1, 2, 6)): (3194, 65536, "3.603125"),
    (3, (1, 2, 7)): (3194, 65536, "3.491267"),
    (3, (1, 2, 8)): (3194, 65536, "3.008458"),
    (3, (1, 3, 4)): (3194, 65536, "2.860181"),
    (3, (1, 3, 5)): (3194, 65536, "3.149485"),
    (3, (1, 3, 6)): (3194, 65536, "3.702780"),
    (3, (1, 3, 7)): (3194, 65536, "3.832265"),
    (3, (1, 3, 8)): (3194, 65536, "3.308712"),
    (3, (1, 4, 5)): (3194, 65536, "3.422874"),
    (3, (1, 4, 6)): (3194, 65536, "3.704301"),
    (3, (1, 4, 7)): (3194, 65536, "4.225000"),
    (3, (1, 4, 8)): (3194, 65536, "3.865275"),
    (3, (1, 5, 6)): (3194, 65536, "3.721368"),
    (3, (1, 5, 7)): (3194, 65536, "3.838751"),
    (3, (1, 5, 8)): (3194, 65536, "3.865275"),
    (3, (1, 6, 7)): (3194, 65536, "3.557971"),
    (3, (1, 6, 8)): (3194, 65536, "3.308712"),
    (3, (1, 7, 8)): (3194, 65536, "3.008458"),
    (3, (2, 3, 4)): (3194, 65536, "3.040346"),
    (3, (2, 3, 5)): (3194, 65536, "3.373874"),
    (3, (2, 3, 6)): (3194, 65536, "3.853886"),
    (3, (2, 3, 7)): (3194, 65536, "4.066123"),
    (3, (2, 4, 5)): (3194, 65536, "3.396416"),
    (3, (2, 4, 6)): (3194, 65536, "3.676782"),
    (3, (2, 4, 7)): (3194, 65536, "4.215385"),
    (3, (2, 5, 6)): (3194, 65536, "4.042553"),
    (3, (2, 5, 7)): (3194, 65536, "4.215385"),
    (3, (2, 6, 7)): (3194, 65536, "4.066123"),
    (3, (3, 4, 5)): (3194, 65536, "3.164613"),
    (3, (3, 4, 6)): (3194, 65536, "3.535367"),
    (3, (3, 5, 6)): (3194, 65536, "3.535367"),
}

# k -> (omega_block, omega_boundary, e_max string); the 6-vertex cycle block
HEX_ROWS = {
    2: (199, 729, "0.798658"),
    3: (340, 4096, "1.831905"),
    4: (481, 15625, "2.892857"),
    5: (622, 46656, "3.0"),
    6: (763, 117649, "3.0"),
}

# k -> e_max string for the 4x4 grid block; k=4 is only a published lower bound
RECT_ROWS = {2: "1.225092", 3: "1.752678"}
RECT_K4_LOWER_BOUND = 2.27

# Published 6-decimal strict upper bounds on E_max used in the constant
# derivations (not always the tightest rounding of the exact value).
RECT_PUBLISHED_EMAX_BOUND = {2: "1.225093", 3: "1.752678"}
HEX_PUBLISHED_EMAX_BOUND = {2: "0.798659", 3: "1.831906"}

# Published contraction denominators ((1-beta)|B|, a lower bound) and the
# resulting mixing constants c_k.
RECT_PUBLISHED_DENOMINATOR = {2: "6.199256", 3: "1.978568"}
HEX_PUBLISHED_DENOMINATOR = {2: "1.802011", 3: "0.252141"}
RECT_PUBLISHED_C = {2: 2.844202e10, 3: 1.333706e13}
HEX_PUBLISHED_C = {2: 1.165099e5, 3: 7.017788e6}

# The hexagonal constants also appear in a published summary list with
# different values; the theorem-level values above are the ones the
# derivation supports, so reports flag this pair as inconsistent.
HEX_SUMMARY_C = {2: 1.747648e5, 3: 1.052669e7}

# Published aggregate lower bounds for 3-regular planar families
# (per-vertex membership-minus-divergence sums), keyed by connectivity class.
REGULAR_PUBLISHED_BOUND = {
    ("two", 2): "10.32755",
    ("three", 2): "20.659512",
    ("three", 3): "2.489598",
    ("dual4", 2): "30.4512",
    ("dual4", 3): "2.489598",
}

# Published mixing constants for the regular families (b=10, m=24), derived
# from the bounds above via denominator = bound / 2.
REGULAR_PUBLISHED_C = {
    ("two", 2): 4.391132e7,
    ("three", 2): 2.195097e7,
    ("three", 3): 4.852027e9,
    ("dual4", 2): 1.489256e7,
}
