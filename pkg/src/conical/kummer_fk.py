"""Correction polynomial tables for the large-tau Bessel-phase branch.

Generated by scripts/derive_kummer_coeffs.py; do not edit by hand.
Each table entry maps (power of z, power of A) to an exact rational
coefficient (numerator, denominator), where z is the branch variable
1 / (2 s (x + s)) and A = 1/alpha with alpha = 2 arccosh(x).  f_0 = 1.
The generator verifies f_1 and f_2 against independently known closed
forms for every order before writing this file.
"""

from __future__ import annotations

import math

FK_ORDER_MAX = 8
FK_COUNT = 8

FK_TABLES = {
    0: (
        {(0, 0): (1, 1)},
        {(0, 0): (-1, 4), (0, 1): (1, 2), (1, 0): (-1, 2)},
        {(0, 0): (1, 96), (0, 1): (-1, 8), (0, 2): (-1, 8), (1, 0): (3, 8), (1, 1): (-1, 4), (2, 0): (3, 8)},
        {(0, 0): (1, 384), (0, 1): (1, 192), (0, 2): (1, 32), (0, 3): (1, 16), (1, 0): (-29, 192), (1, 1): (3, 16), (1, 2): (1, 16), (2, 0): (-15, 32), (2, 1): (3, 16), (3, 0): (-5, 16)},
        {(0, 0): (-1, 10240), (0, 1): (1, 768), (0, 2): (-1, 768), (0, 3): (-1, 64), (0, 4): (-5, 128), (1, 0): (11, 256), (1, 1): (-29, 384), (1, 2): (-3, 64), (1, 3): (-1, 32), (2, 0): (81, 256), (2, 1): (-15, 64), (2, 2): (-3, 64), (3, 0): (35, 64), (3, 1): (-5, 32), (4, 0): (35, 128)},
        {(0, 0): (-19, 368640), (0, 1): (-1, 20480), (0, 2): (-1, 3072), (0, 3): (1, 1536), (0, 4): (5, 512), (0, 5): (7, 256), (1, 0): (-1759, 184320), (1, 1): (11, 512), (1, 2): (29, 1536), (1, 3): (3, 128), (1, 4): (5, 256), (2, 0): (-155, 1024), (2, 1): (81, 512), (2, 2): (15, 256), (2, 3): (3, 128), (3, 0): (-785, 1536), (3, 1): (35, 128), (3, 2): (5, 128), (4, 0): (-315, 512), (4, 1): (35, 256), (5, 0): (-63, 256)},
        {(0, 0): (79, 61931520), (0, 1): (-19, 737280), (0, 2): (1, 81920), (0, 3): (1, 6144), (0, 4): (-5, 12288), (0, 5): (-7, 1024), (0, 6): (-21, 1024), (1, 0): (427, 245760), (1, 1): (-1759, 368640), (1, 2): (-11, 2048), (1, 3): (-29, 3072), (1, 4): (-15, 1024), (1, 5): (-7, 512), (2, 0): (4669, 81920), (2, 1): (-155, 2048), (2, 2): (-81, 2048), (2, 3): (-15, 512), (2, 4): (-15, 1024), (3, 0): (2065, 6144), (3, 1): (-785, 3072), (3, 2): (-35, 512), (3, 3): (-5, 256), (4, 0): (8995, 12288), (4, 1): (-315, 1024), (4, 2): (-35, 1024), (5, 0): (693, 1024), (5, 1): (-63, 512), (6, 0): (231, 1024)},
        {(0, 0): (55, 49545216), (0, 1): (79, 123863040), (0, 2): (19, 2949120), (0, 3): (-1, 163840), (0, 4): (-5, 49152), (0, 5): (7, 24576), (0, 6): (21, 4096), (0, 7): (33, 2048), (1, 0): (-6623, 24772608), (1, 1): (427, 491520), (1, 2): (1759, 1474560), (1, 3): (11, 4096), (1, 4): (145, 24576), (1, 5): (21, 2048), (1, 6): (21, 2048), (2, 0): (-1169, 65536), (2, 1): (4669, 163840), (2, 2): (155, 8192), (2, 3): (81, 4096), (2, 4): (75, 4096), (2, 5): (21, 2048), (3, 0): (-17045, 98304), (3, 1): (2065, 12288), (3, 2): (785, 12288), (3, 3): (35, 1024), (3, 4): (25, 2048), (4, 0): (-9975, 16384), (4, 1): (8995, 24576), (4, 2): (315, 4096), (4, 3): (35, 2048), (5, 0): (-8001, 8192), (5, 1): (693, 2048), (5, 2): (63, 2048), (6, 0): (-3003, 4096), (6, 1): (231, 2048), (7, 0): (-429, 2048)},
    ),
    1: (
        {(0, 0): (1, 1)},
        {(0, 0): (-3, 4), (0, 1): (3, 2), (1, 0): (-3, 2)},
        {(0, 0): (7, 32), (0, 1): (-9, 8), (0, 2): (3, 8), (1, 0): (15, 8), (1, 1): (-9, 4), (2, 0): (15, 8)},
        {(0, 0): (-3, 128), (0, 1): (21, 64), (0, 2): (-9, 32), (0, 3): (-1, 16), (1, 0): (-73, 64), (1, 1): (45, 16), (1, 2): (-9, 16), (2, 0): (-105, 32), (2, 1): (45, 16), (3, 0): (-35, 16)},
        {(0, 0): (-59, 30720), (0, 1): (-9, 256), (0, 2): (21, 256), (0, 3): (3, 64), (0, 4): (3, 128), (1, 0): (115, 256), (1, 1): (-219, 128), (1, 2): (45, 64), (1, 3): (3, 32), (2, 0): (745, 256), (2, 1): (-315, 64), (2, 2): (45, 64), (3, 0): (315, 64), (3, 1): (-105, 32), (4, 0): (315, 128)},
        {(0, 0): (23, 40960), (0, 1): (-59, 20480), (0, 2): (-9, 1024), (0, 3): (-7, 512), (0, 4): (-9, 512), (0, 5): (-3, 256), (1, 0): (-2637, 20480), (1, 1): (345, 512), (1, 2): (-219, 512), (1, 3): (-15, 128), (1, 4): (-9, 256), (2, 0): (-1785, 1024), (2, 1): (2235, 512), (2, 2): (-315, 256), (2, 3): (-15, 128), (3, 0): (-2905, 512), (3, 1): (945, 128), (3, 2): (-105, 128), (4, 0): (-3465, 512), (4, 1): (945, 256), (5, 0): (-693, 256)},
        {(0, 0): (2323, 61931520), (0, 1): (69, 81920), (0, 2): (-59, 81920), (0, 3): (3, 2048), (0, 4): (21, 4096), (0, 5): (9, 1024), (0, 6): (7, 1024), (1, 0): (1411, 49152), (1, 1): (-7911, 40960), (1, 2): (345, 2048), (1, 3): (73, 1024), (1, 4): (45, 1024), (1, 5): (9, 512), (2, 0): (38959, 49152), (2, 1): (-5355, 2048), (2, 2): (2235, 2048), (2, 3): (105, 512), (2, 4): (45, 1024), (3, 0): (9135, 2048), (3, 1): (-8715, 1024), (3, 2): (945, 512), (3, 3): (35, 256), (4, 0): (39165, 4096), (4, 1): (-10395, 1024), (4, 2): (945, 1024), (5, 0): (9009, 1024), (5, 1): (-2079, 512), (6, 0): (3003, 1024)},
        {(0, 0): (-1297, 82575360), (0, 1): (2323, 41287680), (0, 2): (69, 327680), (0, 3): (59, 491520), (0, 4): (-9, 16384), (0, 5): (-21, 8192), (0, 6): (-21, 4096), (0, 7): (-9, 2048), (1, 0): (-215287, 41287680), (1, 1): (1411, 32768), (1, 2): (-7911, 163840), (1, 3): (-115, 4096), (1, 4): (-219, 8192), (1, 5): (-45, 2048), (1, 6): (-21, 2048), (2, 0): (-19103, 65536), (2, 1): (38959, 32768), (2, 2): (-5355, 8192), (2, 3): (-745, 4096), (2, 4): (-315, 4096), (2, 5): (-45, 2048), (3, 0): (-263963, 98304), (3, 1): (27405, 4096), (3, 2): (-8715, 4096), (3, 3): (-315, 1024), (3, 4): (-105, 2048), (4, 0): (-151305, 16384), (4, 1): (117495, 8192), (4, 2): (-10395, 4096), (4, 3): (-315, 2048), (5, 0): (-120351, 8192), (5, 1): (27027, 2048), (5, 2): (-2079, 2048), (6, 0): (-45045, 4096), (6, 1): (9009, 2048), (7, 0): (-6435, 2048)},
    ),
    2: (
        {(0, 0): (1, 1)},
        {(0, 0): (-5, 4), (0, 1): (5, 2), (1, 0): (-5, 2)},
        {(0, 0): (65, 96), (0, 1): (-25, 8), (0, 2): (15, 8), (1, 0): (35, 8), (1, 1): (-25, 4), (2, 0): (35, 8)},
        {(0, 0): (-25, 128), (0, 1): (325, 192), (0, 2): (-75, 32), (0, 3): (5, 16), (1, 0): (-235, 64), (1, 1): (175, 16), (1, 2): (-75, 16), (2, 0): (-315, 32), (2, 1): (175, 16), (3, 0): (-105, 16)},
        {(0, 0): (491, 18432), (0, 1): (-125, 256), (0, 2): (325, 256), (0, 3): (-25, 64), (0, 4): (-5, 128), (1, 0): (1505, 768), (1, 1): (-1175, 128), (1, 2): (525, 64), (1, 3): (-25, 32), (2, 0): (8435, 768), (2, 1): (-1575, 64), (2, 2): (525, 64), (3, 0): (1155, 64), (3, 1): (-525, 32), (4, 0): (1155, 128)},
        {(0, 0): (5, 8192), (0, 1): (2455, 36864), (0, 2): (-375, 1024), (0, 3): (325, 1536), (0, 4): (25, 512), (0, 5): (3, 256), (1, 0): (-3047, 4096), (1, 1): (7525, 1536), (1, 2): (-3525, 512), (1, 3): (175, 128), (1, 4): (25, 256), (2, 0): (-8295, 1024), (2, 1): (42175, 1536), (2, 2): (-4725, 256), (2, 3): (175, 128), (3, 0): (-12775, 512), (3, 1): (5775, 128), (3, 2): (-1575, 128), (4, 0): (-15015, 512), (4, 1): (5775, 256), (5, 0): (-3003, 256)},
        {(0, 0): (-2783, 4128768), (0, 1): (25, 16384), (0, 2): (2455, 49152), (0, 3): (-125, 2048), (0, 4): (-325, 12288), (0, 5): (-15, 1024), (0, 6): (-5, 1024), (1, 0): (3493, 16384), (1, 1): (-15235, 8192), (1, 2): (7525, 2048), (1, 3): (-1175, 1024), (1, 4): (-175, 1024), (1, 5): (-15, 512), (2, 0): (72793, 16384), (2, 1): (-41475, 2048), (2, 2): (42175, 2048), (2, 3): (-1575, 512), (2, 4): (-175, 1024), (3, 0): (47355, 2048), (3, 1): (-63875, 1024), (3, 2): (17325, 512), (3, 3): (-525, 256), (4, 0): (197505, 4096), (4, 1): (-75075, 1024), (4, 2): (17325, 1024), (5, 0): (45045, 1024), (5, 1): (-15015, 512), (6, 0): (15015, 1024)},
        {(0, 0): (995, 49545216), (0, 1): (-13915, 8257536), (0, 2): (75, 65536), (0, 3): (2455, 294912), (0, 4): (125, 16384), (0, 5): (65, 8192), (0, 6): (25, 4096), (0, 7): (5, 2048), (1, 0): (-1187563, 24772608), (1, 1): (17465, 32768), (1, 2): (-45705, 32768), (1, 3): (7525, 12288), (1, 4): (1175, 8192), (1, 5): (105, 2048), (1, 6): (25, 2048), (2, 0): (-126693, 65536), (2, 1): (363965, 32768), (2, 2): (-124425, 8192), (2, 3): (42175, 12288), (2, 4): (1575, 4096), (2, 5): (105, 2048), (3, 0): (-1588153, 98304), (3, 1): (236775, 4096), (3, 2): (-191625, 4096), (3, 3): (5775, 1024), (3, 4): (525, 2048), (4, 0): (-875875, 16384), (4, 1): (987525, 8192), (4, 2): (-225225, 4096), (4, 3): (5775, 2048), (5, 0): (-685685, 8192), (5, 1): (225225, 2048), (5, 2): (-45045, 2048), (6, 0): (-255255, 4096), (6, 1): (75075, 2048), (7, 0): (-36465, 2048)},
    ),
    3: (
        {(0, 0): (1, 1)},
        {(0, 0): (-7, 4), (0, 1): (7, 2), (1, 0): (-7, 2)},
        {(0, 0): (133, 96), (0, 1): (-49, 8), (0, 2): (35, 8), (1, 0): (63, 8), (1, 1): (-49, 4), (2, 0): (63, 8)},
        {(0, 0): (-245, 384), (0, 1): (931, 192), (0, 2): (-245, 32), (0, 3): (35, 16), (1, 0): (-1631, 192), (1, 1): (441, 16), (1, 2): (-245, 16), (2, 0): (-693, 32), (2, 1): (441, 16), (3, 0): (-231, 16)},
        {(0, 0): (5509, 30720), (0, 1): (-1715, 768), (0, 2): (4655, 768), (0, 3): (-245, 64), (0, 4): (35, 128), (1, 0): (1491, 256), (1, 1): (-11417, 384), (1, 2): (2205, 64), (1, 3): (-245, 32), (2, 0): (7497, 256), (2, 1): (-4851, 64), (2, 2): (2205, 64), (3, 0): (3003, 64), (3, 1): (-1617, 32), (4, 0): (3003, 128)},
        {(0, 0): (-2009, 73728), (0, 1): (38563, 61440), (0, 2): (-8575, 3072), (0, 3): (4655, 1536), (0, 4): (-245, 512), (0, 5): (-7, 256), (1, 0): (-104573, 36864), (1, 1): (10437, 512), (1, 2): (-57085, 1536), (1, 3): (2205, 128), (1, 4): (-245, 256), (2, 0): (-26565, 1024), (2, 1): (52479, 512), (2, 2): (-24255, 256), (2, 3): (2205, 128), (3, 0): (-38885, 512), (3, 1): (21021, 128), (3, 2): (-8085, 128), (4, 0): (-45045, 512), (4, 1): (21021, 256), (5, 0): (-9009, 256)},
        {(0, 0): (983, 2949120), (0, 1): (-14063, 147456), (0, 2): (38563, 49152), (0, 3): (-8575, 6144), (0, 4): (4655, 12288), (0, 5): (49, 1024), (0, 6): (7, 1024), (1, 0): (85141, 81920), (1, 1): (-732011, 73728), (1, 2): (52185, 2048), (1, 3): (-57085, 3072), (1, 4): (2205, 1024), (1, 5): (49, 512), (2, 0): (1386441, 81920), (2, 1): (-185955, 2048), (2, 2): (262395, 2048), (2, 3): (-24255, 512), (2, 4): (2205, 1024), (3, 0): (167167, 2048), (3, 1): (-272195, 1024), (3, 2): (105105, 512), (3, 3): (-8085, 256), (4, 0): (677677, 4096), (4, 1): (-315315, 1024), (4, 2): (105105, 1024), (5, 0): (153153, 1024), (5, 1): (-63063, 512), (6, 0): (51051, 1024)},
        {(0, 0): (1505, 2359296), (0, 1): (6881, 5898240), (0, 2): (-70315, 589824), (0, 3): (38563, 98304), (0, 4): (-8575, 49152), (0, 5): (-931, 24576), (0, 6): (-49, 4096), (0, 7): (-5, 2048), (1, 0): (-1746557, 5898240), (1, 1): (595987, 163840), (1, 2): (-3660055, 294912), (1, 3): (52185, 4096), (1, 4): (-57085, 24576), (1, 5): (-441, 2048), (1, 6): (-49, 2048), (2, 0): (-2840607, 327680), (2, 1): (9705087, 163840), (2, 2): (-929775, 8192), (2, 3): (262395, 4096), (2, 4): (-24255, 4096), (2, 5): (-441, 2048), (3, 0): (-10736649, 163840), (3, 1): (1170169, 4096), (3, 2): (-1360975, 4096), (3, 3): (105105, 1024), (3, 4): (-8085, 2048), (4, 0): (-3408405, 16384), (4, 1): (4743739, 8192), (4, 2): (-1576575, 4096), (4, 3): (105105, 2048), (5, 0): (-2621619, 8192), (5, 1): (1072071, 2048), (5, 2): (-315315, 2048), (6, 0): (-969969, 4096), (6, 1): (357357, 2048), (7, 0): (-138567, 2048)},
    ),
    4: (
        {(0, 0): (1, 1)},
        {(0, 0): (-9, 4), (0, 1): (9, 2), (1, 0): (-9, 2)},
        {(0, 0): (75, 32), (0, 1): (-81, 8), (0, 2): (63, 8), (1, 0): (99, 8), (1, 1): (-81, 4), (2, 0): (99, 8)},
        {(0, 0): (-189, 128), (0, 1): (675, 64), (0, 2): (-567, 32), (0, 3): (105, 16), (1, 0): (-1047, 64), (1, 1): (891, 16), (1, 2): (-567, 16), (2, 0): (-1287, 32), (2, 1): (891, 16), (3, 0): (-429, 16)},
        {(0, 0): (6271, 10240), (0, 1): (-1701, 256), (0, 2): (4725, 256), (0, 3): (-945, 64), (0, 4): (315, 128), (1, 0): (3531, 256), (1, 1): (-9423, 128), (1, 2): (6237, 64), (1, 3): (-945, 32), (2, 0): (16401, 256), (2, 1): (-11583, 64), (2, 2): (6237, 64), (3, 0): (6435, 64), (3, 1): (-3861, 32), (4, 0): (6435, 128)},
        {(0, 0): (-6867, 40960), (0, 1): (56439, 20480), (0, 2): (-11907, 1024), (0, 3): (7875, 512), (0, 4): (-2835, 512), (0, 5): (63, 256), (1, 0): (-169887, 20480), (1, 1): (31779, 512), (1, 2): (-65961, 512), (1, 3): (10395, 128), (1, 4): (-2835, 256), (2, 0): (-68211, 1024), (2, 1): (147609, 512), (2, 2): (-81081, 256), (2, 3): (10395, 128), (3, 0): (-95667, 512), (3, 1): (57915, 128), (3, 2): (-27027, 128), (4, 0): (-109395, 512), (4, 1): (57915, 256), (5, 0): (-21879, 256)},
        {(0, 0): (111521, 4128768), (0, 1): (-61803, 81920), (0, 2): (395073, 81920), (0, 3): (-19845, 2048), (0, 4): (23625, 4096), (0, 5): (-567, 1024), (0, 6): (-21, 1024), (1, 0): (61765, 16384), (1, 1): (-1528983, 40960), (1, 2): (222453, 2048), (1, 3): (-109935, 1024), (1, 4): (31185, 1024), (1, 5): (-567, 512), (2, 0): (832249, 16384), (2, 1): (-613899, 2048), (2, 2): (1033263, 2048), (2, 3): (-135135, 512), (2, 4): (31185, 1024), (3, 0): (469755, 2048), (3, 1): (-861003, 1024), (3, 2): (405405, 512), (3, 3): (-45045, 256), (4, 0): (1855425, 4096), (4, 1): (-984555, 1024), (4, 2): (405405, 1024), (5, 0): (415701, 1024), (5, 1): (-196911, 512), (6, 0): (138567, 1024)},
        {(0, 0): (-1273, 1310720), (0, 1): (111521, 917504), (0, 2): (-432621, 327680), (0, 3): (131691, 32768), (0, 4): (-59535, 16384), (0, 5): (4725, 8192), (0, 6): (189, 4096), (0, 7): (9, 2048), (1, 0): (-876719, 655360), (1, 1): (555885, 32768), (1, 2): (-10702881, 163840), (1, 3): (370755, 4096), (1, 4): (-329805, 8192), (1, 5): (6237, 2048), (1, 6): (189, 2048), (2, 0): (-9918909, 327680), (2, 1): (7490241, 32768), (2, 2): (-4297293, 8192), (2, 3): (1722105, 4096), (2, 4): (-405405, 4096), (2, 5): (6237, 2048), (3, 0): (-34277243, 163840), (3, 1): (4227795, 4096), (3, 2): (-6027021, 4096), (3, 3): (675675, 1024), (3, 4): (-135135, 2048), (4, 0): (-10465455, 16384), (4, 1): (16698825, 8192), (4, 2): (-6891885, 4096), (4, 3): (675675, 2048), (5, 0): (-7912905, 8192), (5, 1): (3741309, 2048), (5, 2): (-1378377, 2048), (6, 0): (-2909907, 4096), (6, 1): (1247103, 2048), (7, 0): (-415701, 2048)},
    ),
    5: (
        {(0, 0): (1, 1)},
        {(0, 0): (-11, 4), (0, 1): (11, 2), (1, 0): (-11, 2)},
        {(0, 0): (341, 96), (0, 1): (-121, 8), (0, 2): (99, 8), (1, 0): (143, 8), (1, 1): (-121, 4), (2, 0): (143, 8)},
        {(0, 0): (-363, 128), (0, 1): (3751, 192), (0, 2): (-1089, 32), (0, 3): (231, 16), (1, 0): (-1793, 64), (1, 1): (1573, 16), (1, 2): (-1089, 16), (2, 0): (-2145, 32), (2, 1): (1573, 16), (3, 0): (-715, 16)},
        {(0, 0): (142351, 92160), (0, 1): (-3993, 256), (0, 2): (11253, 256), (0, 3): (-2541, 64), (0, 4): (1155, 128), (1, 0): (21593, 768), (1, 1): (-19723, 128), (1, 2): (14157, 64), (1, 3): (-2541, 32), (2, 0): (94523, 768), (2, 1): (-23595, 64), (2, 2): (14157, 64), (3, 0): (12155, 64), (3, 1): (-7865, 32), (4, 0): (12155, 128)},
        {(0, 0): (-24321, 40960), (0, 1): (1565861, 184320), (0, 2): (-35937, 1024), (0, 3): (26257, 512), (0, 4): (-12705, 512), (0, 5): (693, 256), (1, 0): (-1242703, 61440), (1, 1): (237523, 1536), (1, 2): (-177507, 512), (1, 3): (33033, 128), (1, 4): (-12705, 256), (2, 0): (-150865, 1024), (2, 1): (1039753, 1536), (2, 2): (-212355, 256), (2, 3): (33033, 128), (3, 0): (-612755, 1536), (3, 1): (133705, 128), (3, 2): (-70785, 128), (4, 0): (-230945, 512), (4, 1): (133705, 256), (5, 0): (-46189, 256)},
        {(0, 0): (9825299, 61931520), (0, 1): (-267531, 81920), (0, 2): (1565861, 81920), (0, 3): (-83853, 2048), (0, 4): (131285, 4096), (0, 5): (-7623, 1024), (0, 6): (231, 1024), (1, 0): (2718287, 245760), (1, 1): (-13669733, 122880), (1, 2): (712569, 2048), (1, 3): (-414183, 1024), (1, 4): (165165, 1024), (1, 5): (-7623, 512), (2, 0): (31744427, 245760), (2, 1): (-1659515, 2048), (2, 2): (3119259, 2048), (2, 3): (-495495, 512), (2, 4): (165165, 1024), (3, 0): (1130415, 2048), (3, 1): (-6740305, 3072), (3, 2): (1203345, 512), (3, 3): (-165165, 256), (4, 0): (4363645, 4096), (4, 1): (-2540395, 1024), (4, 2): (1203345, 1024), (5, 0): (969969, 1024), (5, 1): (-508079, 512), (6, 0): (323323, 1024)},
        {(0, 0): (-437173, 16515072), (0, 1): (108078289, 123863040), (0, 2): (-2407779, 327680), (0, 3): (10961027, 491520), (0, 4): (-419265, 16384), (0, 5): (78771, 8192), (0, 6): (-2541, 4096), (0, 7): (-33, 2048), (1, 0): (-39273971, 8257536), (1, 1): (29901157, 491520), (1, 2): (-41009199, 163840), (1, 3): (1662661, 4096), (1, 4): (-2070915, 8192), (1, 5): (99099, 2048), (1, 6): (-2541, 2048), (2, 0): (-5789927, 65536), (2, 1): (349188697, 491520), (2, 2): (-14935635, 8192), (2, 3): (7278271, 4096), (2, 4): (-2477475, 4096), (2, 5): (99099, 2048), (3, 0): (-166837385, 294912), (3, 1): (12434565, 4096), (3, 2): (-20220915, 4096), (3, 3): (2807805, 1024), (3, 4): (-825825, 2048), (4, 0): (-81985475, 49152), (4, 1): (48000095, 8192), (4, 2): (-22863555, 4096), (4, 3): (2807805, 2048), (5, 0): (-61015669, 24576), (5, 1): (10669659, 2048), (5, 2): (-4572711, 2048), (6, 0): (-7436429, 4096), (6, 1): (3556553, 2048), (7, 0): (-1062347, 2048)},
    ),
    6: (
        {(0, 0): (1, 1)},
        {(0, 0): (-13, 4), (0, 1): (13, 2), (1, 0): (-13, 2)},
        {(0, 0): (481, 96), (0, 1): (-169, 8), (0, 2): (143, 8), (1, 0): (195, 8), (1, 1): (-169, 4), (2, 0): (195, 8)},
        {(0, 0): (-1859, 384), (0, 1): (6253, 192), (0, 2): (-1859, 32), (0, 3): (429, 16), (1, 0): (-8489, 192), (1, 1): (2535, 16), (1, 2): (-1859, 16), (2, 0): (-3315, 32), (2, 1): (2535, 16), (3, 0): (-1105, 16)},
        {(0, 0): (100061, 30720), (0, 1): (-24167, 768), (0, 2): (68783, 768), (0, 3): (-5577, 64), (0, 4): (3003, 128), (1, 0): (13195, 256), (1, 1): (-110357, 384), (1, 2): (27885, 64), (1, 3): (-5577, 32), (2, 0): (55185, 256), (2, 1): (-43095, 64), (2, 2): (27885, 64), (3, 0): (20995, 64), (3, 1): (-14365, 32), (4, 0): (20995, 128)},
        {(0, 0): (-589303, 368640), (0, 1): (1300793, 61440), (0, 2): (-265837, 3072), (0, 3): (68783, 512), (0, 4): (-39039, 512), (0, 5): (3003, 256), (1, 0): (-7975123, 184320), (1, 1): (171535, 512), (1, 2): (-1213927, 1536), (1, 3): (83655, 128), (1, 4): (-39039, 256), (2, 0): (-299455, 1024), (2, 1): (717405, 512), (2, 2): (-474045, 256), (2, 3): (83655, 128), (3, 0): (-1181245, 1536), (3, 1): (272935, 128), (3, 2): (-158015, 128), (4, 0): (-440895, 512), (4, 1): (272935, 256), (5, 0): (-88179, 256)},
        {(0, 0): (35880143, 61931520), (0, 1): (-7660939, 737280), (0, 2): (14308723, 245760), (0, 3): (-265837, 2048), (0, 4): (481481, 4096), (0, 5): (-39039, 1024), (0, 6): (3003, 1024), (1, 0): (1364623, 49152), (1, 1): (-103676599, 368640), (1, 2): (1886885, 2048), (1, 3): (-1213927, 1024), (1, 4): (585585, 1024), (1, 5): (-39039, 512), (2, 0): (4760249, 16384), (2, 1): (-3892915, 2048), (2, 2): (7891455, 2048), (2, 3): (-1422135, 512), (2, 4): (585585, 1024), (3, 0): (7285265, 6144), (3, 1): (-15356185, 3072), (3, 2): (3002285, 512), (3, 3): (-474045, 256), (4, 0): (27566435, 12288), (4, 1): (-5731635, 1024), (4, 2): (3002285, 1024), (5, 0): (2028117, 1024), (5, 1): (-1146327, 512), (6, 0): (676039, 1024)},
        {(0, 0): (-37512761, 247726080), (0, 1): (466441859, 123863040), (0, 2): (-84270329, 2949120), (0, 3): (14308723, 163840), (0, 4): (-1860859, 16384), (0, 5): (481481, 8192), (0, 6): (-39039, 4096), (0, 7): (429, 2048), (1, 0): (-1746839471, 123863040), (1, 1): (17740099, 98304), (1, 2): (-1140442589, 1474560), (1, 3): (5660655, 4096), (1, 4): (-8497489, 8192), (1, 5): (585585, 2048), (1, 6): (-39039, 2048), (2, 0): (-14755949, 65536), (2, 1): (61883237, 32768), (2, 2): (-42822065, 8192), (2, 3): (23674365, 4096), (2, 4): (-9954945, 4096), (2, 5): (585585, 2048), (3, 0): (-132915809, 98304), (3, 1): (94708445, 12288), (3, 2): (-168918035, 12288), (3, 3): (9006855, 1024), (3, 4): (-3318315, 2048), (4, 0): (-63341915, 16384), (4, 1): (358363655, 24576), (4, 2): (-63047985, 4096), (4, 3): (9006855, 2048), (5, 0): (-46470333, 8192), (5, 1): (26365521, 2048), (5, 2): (-12609597, 2048), (6, 0): (-16900975, 4096), (6, 1): (8788507, 2048), (7, 0): (-2414425, 2048)},
    ),
    7: (
        {(0, 0): (1, 1)},
        {(0, 0): (-15, 4), (0, 1): (15, 2), (1, 0): (-15, 2)},
        {(0, 0): (215, 32), (0, 1): (-225, 8), (0, 2): (195, 8), (1, 0): (255, 8), (1, 1): (-225, 4), (2, 0): (255, 8)},
        {(0, 0): (-975, 128), (0, 1): (3225, 64), (0, 2): (-2925, 32), (0, 3): (715, 16), (1, 0): (-4205, 64), (1, 1): (3825, 16), (1, 2): (-2925, 16), (2, 0): (-4845, 32), (2, 1): (3825, 16), (3, 0): (-1615, 16)},
        {(0, 0): (37441, 6144), (0, 1): (-14625, 256), (0, 2): (41925, 256), (0, 3): (-10725, 64), (0, 4): (6435, 128), (1, 0): (22355, 256), (1, 1): (-63075, 128), (1, 2): (49725, 64), (1, 3): (-10725, 32), (2, 0): (90185, 256), (2, 1): (-72675, 64), (2, 2): (49725, 64), (3, 0): (33915, 64), (3, 1): (-24225, 32), (4, 0): (33915, 128)},
        {(0, 0): (-29705, 8192), (0, 1): (187205, 4096), (0, 2): (-190125, 1024), (0, 3): (153725, 512), (0, 4): (-96525, 512), (0, 5): (9009, 256), (1, 0): (-343661, 4096), (1, 1): (335325, 512), (1, 2): (-819975, 512), (1, 3): (182325, 128), (1, 4): (-96525, 256), (2, 0): (-547485, 1024), (2, 1): (1352775, 512), (2, 2): (-944775, 256), (2, 3): (182325, 128), (3, 0): (-702525, 512), (3, 1): (508725, 128), (3, 2): (-314925, 128), (4, 0): (-780045, 512), (4, 1): (508725, 256), (5, 0): (-156009, 256)},
        {(0, 0): (20352583, 12386304), (0, 1): (-445575, 16384), (0, 2): (2433665, 16384), (0, 3): (-697125, 2048), (0, 4): (1383525, 4096), (0, 5): (-135135, 1024), (0, 6): (15015, 1024), (1, 0): (3043187, 49152), (1, 1): (-5154915, 8192), (1, 2): (4359225, 2048), (1, 3): (-3006575, 1024), (1, 4): (1640925, 1024), (1, 5): (-135135, 512), (2, 0): (29225567, 49152), (2, 1): (-8212275, 2048), (2, 2): (17586075, 2048), (2, 3): (-3464175, 512), (2, 4): (1640925, 1024), (3, 0): (4782015, 2048), (3, 1): (-10537875, 1024), (3, 2): (6613425, 512), (3, 3): (-1154725, 256), (4, 0): (17782765, 4096), (4, 1): (-11700675, 1024), (4, 2): (6613425, 1024), (5, 0): (3900225, 1024), (5, 1): (-2340135, 512), (6, 0): (1300075, 1024)},
        {(0, 0): (-9375665, 16515072), (0, 1): (101762915, 8257536), (0, 2): (-5792475, 65536), (0, 3): (26770315, 98304), (0, 4): (-6274125, 16384), (0, 5): (1936935, 8192), (0, 6): (-225225, 4096), (0, 7): (6435, 2048), (1, 0): (-300407063, 8257536), (1, 1): (15215935, 32768), (1, 2): (-67013895, 32768), (1, 3): (15983825, 4096), (1, 4): (-27059175, 8192), (1, 5): (2297295, 2048), (1, 6): (-225225, 2048), (2, 0): (-33822299, 65536), (2, 1): (146127835, 32768), (2, 2): (-106759575, 8192), (2, 3): (64482275, 4096), (2, 4): (-31177575, 4096), (2, 5): (2297295, 2048), (3, 0): (-96212333, 32768), (3, 1): (71730225, 4096), (3, 2): (-136992375, 4096), (3, 3): (24249225, 1024), (3, 4): (-10392525, 2048), (4, 0): (-133907725, 16384), (4, 1): (266741475, 8192), (4, 2): (-152108775, 4096), (4, 3): (24249225, 2048), (5, 0): (-96985595, 8192), (5, 1): (58503375, 2048), (5, 2): (-30421755, 2048), (6, 0): (-35102025, 4096), (6, 1): (19501125, 2048), (7, 0): (-5014575, 2048)},
    ),
    8: (
        {(0, 0): (1, 1)},
        {(0, 0): (-17, 4), (0, 1): (17, 2), (1, 0): (-17, 2)},
        {(0, 0): (833, 96), (0, 1): (-289, 8), (0, 2): (255, 8), (1, 0): (323, 8), (1, 1): (-289, 4), (2, 0): (323, 8)},
        {(0, 0): (-1445, 128), (0, 1): (14161, 192), (0, 2): (-4335, 32), (0, 3): (1105, 16), (1, 0): (-5967, 64), (1, 1): (5491, 16), (1, 2): (-4335, 16), (2, 0): (-6783, 32), (2, 1): (5491, 16), (3, 0): (-2261, 16)},
        {(0, 0): (964087, 92160), (0, 1): (-24565, 256), (0, 2): (70805, 256), (0, 3): (-18785, 64), (0, 4): (12155, 128), (1, 0): (106913, 768), (1, 1): (-101439, 128), (1, 2): (82365, 64), (1, 3): (-18785, 32), (2, 0): (418931, 768), (2, 1): (-115311, 64), (2, 2): (82365, 64), (3, 0): (52003, 64), (3, 1): (-38437, 32), (4, 0): (52003, 128)},
        {(0, 0): (-59823, 8192), (0, 1): (16389479, 184320), (0, 2): (-368475, 1024), (0, 3): (920465, 1536), (0, 4): (-206635, 512), (0, 5): (21879, 256), (1, 0): (-1852609, 12288), (1, 1): (1817521, 1536), (1, 2): (-1521585, 512), (1, 3): (356915, 128), (1, 4): (-206635, 256), (2, 0): (-938315, 1024), (2, 1): (7121827, 1536), (2, 2): (-1729665, 256), (2, 3): (356915, 128), (3, 0): (-3538465, 1536), (3, 1): (884051, 128), (3, 2): (-576555, 128), (4, 0): (-1300075, 512), (4, 1): (884051, 256), (5, 0): (-260015, 256)},
        {(0, 0): (244922383, 61931520), (0, 1): (-1016991, 16384), (0, 2): (16389479, 49152), (0, 3): (-1596725, 2048), (0, 4): (10125115, 12288), (0, 5): (-371943, 1024), (0, 6): (51051, 1024), (1, 0): (30943723, 245760), (1, 1): (-31494353, 24576), (1, 2): (9087605, 2048), (1, 3): (-6593535, 1024), (1, 4): (3926065, 1024), (1, 5): (-371943, 512), (2, 0): (277437943, 245760), (2, 1): (-15951355, 2048), (2, 2): (35609135, 2048), (2, 3): (-7495215, 512), (2, 4): (3926065, 1024), (3, 0): (8788507, 2048), (3, 1): (-60153905, 3072), (3, 2): (13260765, 512), (3, 3): (-2498405, 256), (4, 0): (32189857, 4096), (4, 1): (-22101275, 1024), (4, 2): (13260765, 1024), (5, 0): (7020405, 1024), (5, 1): (-4420255, 512), (6, 0): (2340135, 1024)},
        {(0, 0): (-83285465, 49545216), (0, 1): (4163680511, 123863040), (0, 2): (-15254865, 65536), (0, 3): (213063227, 294912), (0, 4): (-17563975, 16384), (0, 5): (6075069, 8192), (0, 6): (-867867, 4096), (0, 7): (36465, 2048), (1, 0): (-10421311627, 123863040), (1, 1): (526043291, 491520), (1, 2): (-157471765, 32768), (1, 3): (118138865, 12288), (1, 4): (-72528885, 8192), (1, 5): (7066917, 2048), (1, 6): (-867867, 2048), (2, 0): (-356010277, 327680), (2, 1): (4716445031, 491520), (2, 2): (-239270325, 8192), (2, 3): (462918755, 12288), (2, 4): (-82447365, 4096), (2, 5): (7066917, 2048), (3, 0): (-8707271531, 1474560), (3, 1): (149404619, 4096), (3, 2): (-300769525, 4096), (3, 3): (57463315, 1024), (3, 4): (-27482455, 2048), (4, 0): (-789145525, 49152), (4, 1): (547227569, 8192), (4, 2): (-331519125, 4096), (4, 3): (57463315, 2048), (5, 0): (-565012595, 24576), (5, 1): (119346885, 2048), (5, 2): (-66303825, 2048), (6, 0): (-67863915, 4096), (6, 1): (39782295, 2048), (7, 0): (-9694845, 2048)},
    ),
}


def fk_values(mu, z, inv_alpha, count=FK_COUNT):
    """Evaluate [f_0 .. f_{count-1}] for integer order mu at (z, A)."""
    if not 0 <= mu <= FK_ORDER_MAX:
        raise ValueError(f"no correction table for order {mu}")
    if not 1 <= count <= FK_COUNT:
        raise ValueError(f"correction count {count} outside 1..{FK_COUNT}")
    out = []
    for entry in FK_TABLES[mu][:count]:
        out.append(math.fsum(
            num / den * z ** pz * inv_alpha ** pa
            for (pz, pa), (num, den) in entry.items()
        ))
    return out
