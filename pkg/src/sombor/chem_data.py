"""Compiled-in experimental data and tabulated index values.

Rows keep the published order. Index columns are SO, SO1, ..., SO6 as printed.
"""

from __future__ import annotations

# name, (AcenFac, Entropy, SNar, HNar, HVAP, DHVAP), (SO, SO1, ..., SO6)
OCTANES = (
    ("n-octane", (0.397898, 111.67, 4.159, 1.6, 73.19, 9.915),
     (18.6143, 3, 1.2, 59.2384, 40.1426, 6.4045, 1.63204)),
    ("2-methylheptane", (0.377916, 109.84, 3.871, 1.5, 70.3, 9.484),
     (20.6515, 12, 2.5846, 67.8280, 53.4664, 19.8351, 8.58625)),
    ("3-methylheptane", (0.371002, 111.26, 3.871, 1.5, 71.3, 9.521),
     (20.5024, 12, 2.7692, 66.7913, 52.3477, 20.1844, 7.1007)),
    ("4-methylheptane", (0.371504, 109.32, 3.871, 1.5, 70.91, 9.483),
     (20.5024, 12, 2.7692, 66.7913, 52.3477, 20.1844, 7.1007)),
    ("3-ethylhexane", (0.362472, 109.43, 3.871, 1.5, 71.7, 9.476),
     (20.3533, 12, 2.9538, 65.7547, 51.2289, 20.5336, 5.61515)),
    ("2,2-dimethylhexane", (0.339426, 103.42, 3.466, 1.391, 67.7, 8.915),
     (24.7344, 30, 3.8471, 85.3034, 88.8582, 39.7493, 27.755)),
    ("2,3-dimethylhexane", (0.348247, 108.02, 3.584, 1.412, 70.2, 9.272),
     (22.3995, 16, 3.3846, 74.4923, 64.8547, 26.3304, 11.9435)),
    ("2,4-dimethylhexane", (0.344223, 106.98, 3.584, 1.412, 68.5, 9.029),
     (22.5396, 21, 4.1538, 75.3809, 65.6715, 33.615, 14.0549)),
    ("2,5-dimethylhexane", (0.356830, 105.72, 3.584, 1.412, 68.6, 9.051),
     (22.6886, 21, 3.9692, 76.4176, 66.7903, 33.2657, 15.5405)),
    ("3,3-dimethylhexane", (0.322596, 104.74, 3.466, 1.391, 68.5, 8.973),
     (24.4910, 30, 4.1647, 83.5262, 86.2332, 40.4744, 25.2129)),
    ("3,4-dimethylhexane", (0.340345, 106.59, 3.584, 1.412, 70.2, 9.316),
     (22.2504, 16, 3.5692, 73.4557, 63.7359, 26.6796, 10.458)),
    ("3-ethyl-2-methylpentane", (0.332433, 106.06, 3.584, 1.412, 69.7, 9.209),
     (22.2504, 16, 3.5692, 73.4557, 63.7359, 26.6796, 10.458)),
    ("3-ethyl-3-methylpentane", (0.306899, 101.48, 3.466, 1.391, 69.3, 9.081),
     (24.2477, 30, 4.4823, 81.7490, 83.6083, 41.1995, 22.6709)),
    ("2,2,3-trimethylpentane", (0.300816, 101.31, 3.178, 1.315, 67.3, 8.826),
     (26.3732, 34, 4.7116, 91.2484, 99.3103, 46.4613, 29.1333)),
    ("2,2,4-trimethylpentane", (0.305370, 104.09, 3.178, 1.315, 64.87, 8.402),
     (26.7716, 39, 5.2316, 93.8929, 102.182, 53.18, 34.7092)),
    ("2,3,3-trimethylpentane", (0.293177, 102.06, 3.178, 1.315, 68.1, 8.897),
     (26.2790, 34, 4.8447, 90.5079, 97.804, 46.8371, 28.0768)),
    ("2,3,4-trimethylpentane", (0.317422, 102.39, 3.296, 1.333, 68.37, 9.014),
     (24.2967, 20, 4, 82.1933, 77.3617, 32.4764, 16.7863)),
    ("2,2,3,3-tetramethylbutane", (0.255294, 93.06, 2.773, 1.231, 66.2, 8.41),
     (30.3955, 45, 5.2941, 108.406, 134.083, 58.5364, 45.4455)),
)

# Main chain length and (position, branch length) substituents of each octane.
OCTANE_SKELETONS = (
    (8, ()),
    (7, ((2, 1),)),
    (7, ((3, 1),)),
    (7, ((4, 1),)),
    (6, ((3, 2),)),
    (6, ((2, 1), (2, 1))),
    (6, ((2, 1), (3, 1))),
    (6, ((2, 1), (4, 1))),
    (6, ((2, 1), (5, 1))),
    (6, ((3, 1), (3, 1))),
    (6, ((3, 1), (4, 1))),
    (5, ((3, 2), (2, 1))),
    (5, ((3, 2), (3, 1))),
    (5, ((2, 1), (2, 1), (3, 1))),
    (5, ((2, 1), (2, 1), (4, 1))),
    (5, ((2, 1), (3, 1), (3, 1))),
    (5, ((2, 1), (3, 1), (4, 1))),
    (4, ((2, 1), (2, 1), (3, 1), (3, 1))),
)

# BP in degrees C, (SO, SO1, ..., SO6)
BENZENOIDS = (
    (218, (35.6354, 10, 1.53846, 112.849, 94.311, 14.5692, 4.22279)),
    (338, (54.1602, 15, 2.30769, 171.495, 150.105, 21.8538, 6.33419)),
    (340, (54.3003, 20, 3.07692, 172.384, 150.922, 29.1383, 8.44559)),
    (431, (72.6850, 20, 3.07692, 230.141, 205.900, 29.1383, 8.44559)),
    (425, (72.8251, 25, 3.84615, 231.03, 206.717, 36.4229, 10.557)),
    (429, (72.5450, 15, 2.30769, 229.253, 205.083, 21.8538, 6.33419)),
    (440, (72.9651, 30, 4.61538, 231.918, 207.534, 43.7075, 12.6684)),
    (496, (85.5530, 25, 3.84615, 271.016, 249.128, 36.4229, 10.557)),
    (493, (85.4130, 20, 3.07692, 270.127, 248.311, 29.1383, 8.44559)),
    (497, (85.4130, 20, 3.07692, 270.127, 248.311, 29.1383, 8.44559)),
    (547, (98.4209, 30, 4.61538, 311.89, 292.357, 43.7075, 12.6684)),
    (542, (98.2809, 25, 3.84615, 311.002, 291.540, 36.4229, 10.557)),
    (535, (91.2098, 25, 3.84615, 288.787, 261.695, 36.4229, 10.557)),
    (536, (91.3499, 30, 4.61538, 289.676, 262.511, 43.7075, 12.6684)),
    (531, (91.3499, 30, 4.61538, 289.676, 262.511, 43.7075, 12.6684)),
    (519, (91.2098, 25, 3.84615, 288.787, 261.695, 36.4229, 10.557)),
    (590, (111.149, 30, 4.61538, 351.876, 334.768, 43.7075, 12.6684)),
    (592, (103.938, 25, 3.84615, 328.773, 304.106, 36.4229, 10.557)),
    (596, (104.078, 30, 4.61538, 329.662, 304.923, 43.7075, 12.6684)),
    (594, (104.078, 30, 4.61538, 329.662, 304.923, 43.7075, 12.6684)),
    (595, (103.938, 25, 3.84615, 328.773, 304.106, 36.4229, 10.557)),
)

# Benzenoid skeletons attached where the fingerprint pins the molecule down:
# row -> (name, hexagon centers in axial coordinates).
BENZENOID_SKELETONS = {
    1: ("naphthalene", ((0, 0), (1, 0))),
    2: ("phenanthrene", ((0, 0), (1, 0), (1, 1))),
    3: ("anthracene", ((0, 0), (1, 0), (2, 0))),
    6: ("triphenylene", ((0, 0), (1, 0), (-1, 1), (0, -1))),
    7: ("tetracene", ((0, 0), (1, 0), (2, 0), (3, 0))),
    17: ("coronene", ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))),
}

# Printed BP models over benzenoids: index -> (slope, intercept, R), as strings
# so the printed precision is kept.
BP_MODELS = {
    "SO": ("5.099", "57.41", "0.9929"),
    "SO1": ("13.54", "164.1", "0.7905"),
    "SO2": ("88", "164.1", "0.7905"),
    "SO3": ("1.612", "56.75", "0.9930"),
    "SO4": ("1.618", "92.86", "0.9874"),
    "SO5": ("9.293", "164.1", "0.7905"),
    "SO6": ("32.06", "164.1", "0.7905"),
}

# Printed |R| over octanes: property -> values for SO, SO1, ..., SO6.
CORRELATION_TABLE = {
    "AcenFac": ("0.9594", "0.9192", "0.9202", "0.9482", "0.9466", "0.9303", "0.9029"),
    "Entropy": ("0.9465", "0.8898", "0.8433", "0.9399", "0.9422", "0.8890", "0.9043"),
    "SNar": ("0.9842", "0.9311", "0.9355", "0.9791", "0.9634", "0.9501", "0.9295"),
    "HNar": ("0.9618", "0.9098", "0.9512", "0.9551", "0.9318", "0.9402", "0.8959"),
    "HVAP": ("0.9031", "0.9174", "0.9198", "0.9112", "0.8837", "0.9393", "0.9053"),
    "DHVAP": ("0.9469", "0.9522", "0.9560", "0.9509", "0.93", "0.9726", "0.9379"),
}

# Printed octane models: (property, index) -> (slope, intercept).
OCTANE_MODELS = {
    ("AcenFac", "SO"): ("-0.01171", "0.6093"),
    ("Entropy", "SO"): ("-1.473", "139.8"),
    ("SNar", "SO"): ("-0.1129", "6.169"),
    ("HNar", "SO"): ("-0.02947", "2.096"),
    ("HVAP", "SO"): ("-0.6303", "83.88"),
    ("DHVAP", "SO"): ("-0.125", "12.05"),
    ("AcenFac", "SO1"): ("-0.0002884", "0.4003"),
    ("Entropy", "SO1"): ("-0.3558", "113.4"),
    ("SNar", "SO1"): ("-0.02746", "4.146"),
    ("HNar", "SO1"): ("-0.007165", "1.568"),
    ("HVAP", "SO1"): ("-0.1645", "72.85"),
    ("DHVAP", "SO1"): ("-0.0323", "9.85"),
    ("AcenFac", "SO2"): ("-0.03143", "0.4536"),
    ("Entropy", "SO2"): ("-3.671", "119.2"),
    ("SNar", "SO2"): ("-0.3003", "4.658"),
    ("HNar", "SO2"): ("-0.08155", "1.714"),
    ("HVAP", "SO2"): ("-1.796", "75.9"),
    ("DHVAP", "SO2"): ("-0.3531", "10.45"),
    ("AcenFac", "SO3"): ("-0.0002752", "0.5523"),
    ("Entropy", "SO3"): ("-0.3477", "132.8"),
    ("SNar", "SO3"): ("-0.02671", "5.633"),
    ("HNar", "SO3"): ("-0.006959", "1.955"),
    ("HVAP", "SO3"): ("-0.1512", "81.06"),
    ("DHVAP", "SO3"): ("-0.02985", "11.48"),
    ("AcenFac", "SO4"): ("-0.001418", "0.4417"),
    ("Entropy", "SO4"): ("-0.1799", "118.8"),
    ("SNar", "SO4"): ("-0.01357", "4.544"),
    ("HNar", "SO4"): ("-0.003504", "1.669"),
    ("HVAP", "SO4"): ("-0.07568", "74.81"),
    ("DHVAP", "SO4"): ("-0.01507", "10.25"),
    ("AcenFac", "SO5"): ("-0.002446", "0.4163"),
    ("Entropy", "SO5"): ("-0.2979", "115.2"),
    ("SNar", "SO5"): ("-0.02348", "4.304"),
    ("HNar", "SO5"): ("-0.006205", "1.612"),
    ("HVAP", "SO5"): ("-0.1412", "73.81"),
    ("DHVAP", "SO5"): ("-0.02765", "10.04"),
    ("AcenFac", "SO6"): ("-0.002724", "0.3845"),
    ("Entropy", "SO6"): ("-0.3477", "111.6"),
    ("SNar", "SO6"): ("-0.02635", "4.003"),
    ("HNar", "SO6"): ("-0.006783", "1.529"),
    ("HVAP", "SO6"): ("-0.1561", "71.96"),
    ("DHVAP", "SO6"): ("-0.03059", "9.674"),
}
