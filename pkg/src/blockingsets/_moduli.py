"""Default moduli, generated by tools/gen_moduli.py -- do not edit."""

MODULI_TABLE_VERSION = 1

# (p, h): coefficients low to high
DEFAULT_MODULI = {
    (2, 1): [1, 1],
    (2, 2): [1, 1, 1],
    (2, 3): [1, 1, 0, 1],
    (2, 4): [1, 1, 0, 0, 1],
    (2, 5): [1, 0, 1, 0, 0, 1],
    (2, 6): [1, 1, 0, 0, 0, 0, 1],
    (2, 7): [1, 1, 0, 0, 0, 0, 0, 1],
    (2, 8): [1, 0, 1, 1, 1, 0, 0, 0, 1],
    (2, 9): [1, 0, 0, 0, 1, 0, 0, 0, 0, 1],
    (2, 10): [1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1],
    (2, 11): [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    (2, 12): [1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1],
    (2, 13): [1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    (2, 14): [1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    (2, 15): [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    (2, 16): [1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    (3, 1): [1, 1],
    (3, 2): [2, 2, 1],
    (3, 3): [1, 2, 0, 1],
    (3, 4): [2, 2, 0, 0, 1],
    (3, 5): [1, 2, 0, 0, 0, 1],
    (3, 6): [2, 2, 0, 0, 0, 0, 1],
    (3, 7): [1, 0, 2, 0, 0, 0, 0, 1],
    (3, 8): [2, 0, 0, 2, 0, 0, 0, 0, 1],
    (3, 9): [1, 1, 2, 2, 0, 0, 0, 0, 0, 1],
    (3, 10): [2, 2, 0, 2, 0, 0, 0, 0, 0, 0, 1],
    (5, 1): [3, 1],
    (5, 2): [2, 4, 1],
    (5, 3): [3, 3, 0, 1],
    (5, 4): [2, 3, 1, 0, 1],
    (5, 5): [3, 4, 0, 0, 0, 1],
    (5, 6): [2, 4, 0, 0, 0, 0, 1],
    (7, 1): [4, 1],
    (7, 2): [3, 6, 1],
    (7, 3): [2, 3, 0, 1],
    (7, 4): [5, 4, 1, 0, 1],
    (7, 5): [4, 1, 0, 0, 0, 1],
    (11, 1): [9, 1],
    (11, 2): [7, 10, 1],
    (11, 3): [5, 1, 0, 1],
    (11, 4): [2, 10, 0, 0, 1],
    (13, 1): [11, 1],
    (13, 2): [2, 12, 1],
    (13, 3): [7, 1, 0, 1],
    (13, 4): [2, 12, 1, 0, 1],
    (17, 1): [14, 1],
    (17, 2): [3, 16, 1],
    (17, 3): [14, 1, 0, 1],
    (19, 1): [17, 1],
    (19, 2): [2, 18, 1],
    (19, 3): [5, 1, 0, 1],
    (23, 1): [18, 1],
    (23, 2): [7, 22, 1],
    (23, 3): [12, 1, 0, 1],
    (29, 1): [27, 1],
    (29, 2): [3, 28, 1],
    (29, 3): [18, 1, 0, 1],
    (31, 1): [28, 1],
    (31, 2): [12, 30, 1],
    (31, 3): [28, 1, 0, 1],
    (37, 1): [35, 1],
    (37, 2): [5, 36, 1],
    (37, 3): [24, 1, 0, 1],
    (41, 1): [35, 1],
    (41, 2): [12, 40, 1],
    (43, 1): [40, 1],
    (43, 2): [3, 42, 1],
    (47, 1): [42, 1],
    (47, 2): [13, 46, 1],
    (53, 1): [51, 1],
    (53, 2): [5, 52, 1],
    (59, 1): [57, 1],
    (59, 2): [2, 58, 1],
    (61, 1): [59, 1],
    (61, 2): [2, 60, 1],
    (67, 1): [65, 1],
    (67, 2): [12, 66, 1],
    (71, 1): [64, 1],
    (71, 2): [11, 70, 1],
    (73, 1): [68, 1],
    (73, 2): [11, 72, 1],
    (79, 1): [76, 1],
    (79, 2): [3, 78, 1],
    (83, 1): [81, 1],
    (83, 2): [2, 82, 1],
    (89, 1): [86, 1],
    (89, 2): [6, 88, 1],
    (97, 1): [92, 1],
    (97, 2): [5, 96, 1],
    (101, 1): [99, 1],
    (101, 2): [3, 100, 1],
    (103, 1): [98, 1],
    (103, 2): [5, 102, 1],
    (107, 1): [105, 1],
    (107, 2): [5, 106, 1],
    (109, 1): [103, 1],
    (109, 2): [6, 108, 1],
    (113, 1): [110, 1],
    (113, 2): [10, 112, 1],
    (127, 1): [124, 1],
    (127, 2): [3, 126, 1],
    (131, 1): [129, 1],
    (131, 2): [14, 130, 1],
    (137, 1): [134, 1],
    (137, 2): [6, 136, 1],
    (139, 1): [137, 1],
    (139, 2): [2, 138, 1],
    (149, 1): [147, 1],
    (149, 2): [3, 148, 1],
    (151, 1): [145, 1],
    (151, 2): [12, 150, 1],
    (157, 1): [152, 1],
    (157, 2): [6, 156, 1],
    (163, 1): [161, 1],
    (163, 2): [11, 162, 1],
    (167, 1): [162, 1],
    (167, 2): [5, 166, 1],
    (173, 1): [171, 1],
    (173, 2): [5, 172, 1],
    (179, 1): [177, 1],
    (179, 2): [7, 178, 1],
    (181, 1): [179, 1],
    (181, 2): [18, 180, 1],
    (191, 1): [172, 1],
    (191, 2): [19, 190, 1],
    (193, 1): [188, 1],
    (193, 2): [5, 192, 1],
    (197, 1): [195, 1],
    (197, 2): [3, 196, 1],
    (199, 1): [196, 1],
    (199, 2): [6, 198, 1],
    (211, 1): [209, 1],
    (211, 2): [3, 210, 1],
    (223, 1): [220, 1],
    (223, 2): [5, 222, 1],
    (227, 1): [225, 1],
    (227, 2): [5, 226, 1],
    (229, 1): [223, 1],
    (229, 2): [6, 228, 1],
    (233, 1): [230, 1],
    (233, 2): [3, 232, 1],
    (239, 1): [232, 1],
    (239, 2): [13, 238, 1],
    (241, 1): [234, 1],
    (241, 2): [13, 240, 1],
    (251, 1): [245, 1],
    (251, 2): [19, 250, 1],
    (257, 1): [254, 1],
    (263, 1): [258, 1],
    (269, 1): [267, 1],
    (271, 1): [265, 1],
    (277, 1): [272, 1],
    (281, 1): [278, 1],
    (283, 1): [280, 1],
    (293, 1): [291, 1],
    (307, 1): [302, 1],
    (311, 1): [294, 1],
    (313, 1): [303, 1],
    (317, 1): [315, 1],
    (331, 1): [328, 1],
    (337, 1): [327, 1],
    (347, 1): [345, 1],
    (349, 1): [347, 1],
    (353, 1): [350, 1],
    (359, 1): [352, 1],
    (367, 1): [361, 1],
    (373, 1): [371, 1],
    (379, 1): [377, 1],
    (383, 1): [378, 1],
    (389, 1): [387, 1],
    (397, 1): [392, 1],
    (401, 1): [398, 1],
    (409, 1): [388, 1],
    (419, 1): [417, 1],
    (421, 1): [419, 1],
    (431, 1): [424, 1],
    (433, 1): [428, 1],
    (439, 1): [424, 1],
    (443, 1): [441, 1],
    (449, 1): [446, 1],
    (457, 1): [444, 1],
    (461, 1): [459, 1],
    (463, 1): [460, 1],
    (467, 1): [465, 1],
    (479, 1): [466, 1],
    (487, 1): [484, 1],
    (491, 1): [489, 1],
    (499, 1): [492, 1],
    (503, 1): [498, 1],
    (509, 1): [507, 1],
    (521, 1): [518, 1],
    (523, 1): [521, 1],
    (541, 1): [539, 1],
    (547, 1): [545, 1],
    (557, 1): [555, 1],
    (563, 1): [561, 1],
    (569, 1): [566, 1],
    (571, 1): [568, 1],
    (577, 1): [572, 1],
    (587, 1): [585, 1],
    (593, 1): [590, 1],
    (599, 1): [592, 1],
    (601, 1): [594, 1],
    (607, 1): [604, 1],
    (613, 1): [611, 1],
    (617, 1): [614, 1],
    (619, 1): [617, 1],
    (631, 1): [628, 1],
    (641, 1): [638, 1],
    (643, 1): [632, 1],
    (647, 1): [642, 1],
    (653, 1): [651, 1],
    (659, 1): [657, 1],
    (661, 1): [659, 1],
    (673, 1): [668, 1],
    (677, 1): [675, 1],
    (683, 1): [678, 1],
    (691, 1): [688, 1],
    (701, 1): [699, 1],
    (709, 1): [707, 1],
    (719, 1): [708, 1],
    (727, 1): [722, 1],
    (733, 1): [727, 1],
    (739, 1): [736, 1],
    (743, 1): [738, 1],
    (751, 1): [748, 1],
    (757, 1): [755, 1],
    (761, 1): [755, 1],
    (769, 1): [758, 1],
    (773, 1): [771, 1],
    (787, 1): [785, 1],
    (797, 1): [795, 1],
    (809, 1): [806, 1],
    (811, 1): [808, 1],
    (821, 1): [819, 1],
    (823, 1): [820, 1],
    (827, 1): [825, 1],
    (829, 1): [827, 1],
    (839, 1): [828, 1],
    (853, 1): [851, 1],
    (857, 1): [854, 1],
    (859, 1): [857, 1],
    (863, 1): [858, 1],
    (877, 1): [875, 1],
    (881, 1): [878, 1],
    (883, 1): [881, 1],
    (887, 1): [882, 1],
    (907, 1): [905, 1],
    (911, 1): [894, 1],
    (919, 1): [912, 1],
    (929, 1): [926, 1],
    (937, 1): [932, 1],
    (941, 1): [939, 1],
    (947, 1): [945, 1],
    (953, 1): [950, 1],
    (967, 1): [962, 1],
    (971, 1): [965, 1],
    (977, 1): [974, 1],
    (983, 1): [978, 1],
    (991, 1): [985, 1],
    (997, 1): [990, 1],
    (1009, 1): [998, 1],
    (1013, 1): [1010, 1],
    (1019, 1): [1017, 1],
    (1021, 1): [1011, 1],
    (1031, 1): [1017, 1],
    (1033, 1): [1028, 1],
    (1039, 1): [1036, 1],
    (1049, 1): [1046, 1],
    (1051, 1): [1044, 1],
    (1061, 1): [1059, 1],
    (1063, 1): [1060, 1],
    (1069, 1): [1063, 1],
    (1087, 1): [1084, 1],
    (1091, 1): [1089, 1],
    (1093, 1): [1088, 1],
    (1097, 1): [1094, 1],
    (1103, 1): [1098, 1],
    (1109, 1): [1107, 1],
    (1117, 1): [1115, 1],
    (1123, 1): [1121, 1],
    (1129, 1): [1118, 1],
    (1151, 1): [1134, 1],
    (1153, 1): [1148, 1],
    (1163, 1): [1158, 1],
    (1171, 1): [1169, 1],
    (1181, 1): [1174, 1],
    (1187, 1): [1185, 1],
    (1193, 1): [1190, 1],
    (1201, 1): [1190, 1],
    (1213, 1): [1211, 1],
    (1217, 1): [1214, 1],
    (1223, 1): [1218, 1],
    (1229, 1): [1227, 1],
    (1231, 1): [1228, 1],
    (1237, 1): [1235, 1],
    (1249, 1): [1242, 1],
    (1259, 1): [1257, 1],
    (1277, 1): [1275, 1],
    (1279, 1): [1276, 1],
    (1283, 1): [1281, 1],
    (1289, 1): [1283, 1],
    (1291, 1): [1289, 1],
    (1297, 1): [1287, 1],
    (1301, 1): [1299, 1],
    (1303, 1): [1297, 1],
    (1307, 1): [1305, 1],
    (1319, 1): [1306, 1],
    (1321, 1): [1308, 1],
    (1327, 1): [1324, 1],
    (1361, 1): [1358, 1],
    (1367, 1): [1362, 1],
    (1373, 1): [1371, 1],
    (1381, 1): [1379, 1],
    (1399, 1): [1386, 1],
    (1409, 1): [1406, 1],
    (1423, 1): [1420, 1],
    (1427, 1): [1425, 1],
    (1429, 1): [1423, 1],
    (1433, 1): [1430, 1],
    (1439, 1): [1432, 1],
    (1447, 1): [1444, 1],
    (1451, 1): [1449, 1],
    (1453, 1): [1451, 1],
    (1459, 1): [1456, 1],
    (1471, 1): [1465, 1],
    (1481, 1): [1478, 1],
    (1483, 1): [1481, 1],
    (1487, 1): [1482, 1],
    (1489, 1): [1475, 1],
    (1493, 1): [1491, 1],
    (1499, 1): [1497, 1],
    (1511, 1): [1500, 1],
    (1523, 1): [1521, 1],
    (1531, 1): [1529, 1],
    (1543, 1): [1538, 1],
    (1549, 1): [1547, 1],
    (1553, 1): [1550, 1],
    (1559, 1): [1540, 1],
    (1567, 1): [1564, 1],
    (1571, 1): [1569, 1],
    (1579, 1): [1576, 1],
    (1583, 1): [1578, 1],
    (1597, 1): [1586, 1],
    (1601, 1): [1598, 1],
    (1607, 1): [1602, 1],
    (1609, 1): [1602, 1],
    (1613, 1): [1610, 1],
    (1619, 1): [1617, 1],
    (1621, 1): [1619, 1],
    (1627, 1): [1624, 1],
    (1637, 1): [1635, 1],
    (1657, 1): [1646, 1],
    (1663, 1): [1660, 1],
    (1667, 1): [1665, 1],
    (1669, 1): [1667, 1],
    (1693, 1): [1691, 1],
    (1697, 1): [1694, 1],
    (1699, 1): [1696, 1],
    (1709, 1): [1706, 1],
    (1721, 1): [1718, 1],
    (1723, 1): [1720, 1],
    (1733, 1): [1731, 1],
    (1741, 1): [1739, 1],
    (1747, 1): [1745, 1],
    (1753, 1): [1746, 1],
    (1759, 1): [1753, 1],
    (1777, 1): [1772, 1],
    (1783, 1): [1773, 1],
    (1787, 1): [1785, 1],
    (1789, 1): [1783, 1],
    (1801, 1): [1790, 1],
    (1811, 1): [1805, 1],
    (1823, 1): [1818, 1],
    (1831, 1): [1828, 1],
    (1847, 1): [1842, 1],
    (1861, 1): [1859, 1],
    (1867, 1): [1865, 1],
    (1871, 1): [1857, 1],
    (1873, 1): [1863, 1],
    (1877, 1): [1875, 1],
    (1879, 1): [1873, 1],
    (1889, 1): [1886, 1],
    (1901, 1): [1899, 1],
    (1907, 1): [1905, 1],
    (1913, 1): [1910, 1],
    (1931, 1): [1929, 1],
    (1933, 1): [1928, 1],
    (1949, 1): [1947, 1],
    (1951, 1): [1948, 1],
    (1973, 1): [1971, 1],
    (1979, 1): [1977, 1],
    (1987, 1): [1985, 1],
    (1993, 1): [1988, 1],
    (1997, 1): [1995, 1],
    (1999, 1): [1996, 1],
    (2003, 1): [1998, 1],
    (2011, 1): [2008, 1],
    (2017, 1): [2012, 1],
    (2027, 1): [2025, 1],
    (2029, 1): [2027, 1],
    (2039, 1): [2032, 1],
    (2053, 1): [2051, 1],
    (2063, 1): [2058, 1],
    (2069, 1): [2067, 1],
    (2081, 1): [2078, 1],
    (2083, 1): [2081, 1],
    (2087, 1): [2082, 1],
    (2089, 1): [2082, 1],
    (2099, 1): [2097, 1],
    (2111, 1): [2104, 1],
    (2113, 1): [2108, 1],
    (2129, 1): [2126, 1],
    (2131, 1): [2129, 1],
    (2137, 1): [2127, 1],
    (2141, 1): [2139, 1],
    (2143, 1): [2140, 1],
    (2153, 1): [2150, 1],
    (2161, 1): [2138, 1],
    (2179, 1): [2172, 1],
    (2203, 1): [2198, 1],
    (2207, 1): [2202, 1],
    (2213, 1): [2211, 1],
    (2221, 1): [2219, 1],
    (2237, 1): [2235, 1],
    (2239, 1): [2236, 1],
    (2243, 1): [2241, 1],
    (2251, 1): [2244, 1],
    (2267, 1): [2265, 1],
    (2269, 1): [2267, 1],
    (2273, 1): [2270, 1],
    (2281, 1): [2274, 1],
    (2287, 1): [2268, 1],
    (2293, 1): [2291, 1],
    (2297, 1): [2292, 1],
    (2309, 1): [2307, 1],
    (2311, 1): [2308, 1],
    (2333, 1): [2331, 1],
    (2339, 1): [2337, 1],
    (2341, 1): [2334, 1],
    (2347, 1): [2344, 1],
    (2351, 1): [2338, 1],
    (2357, 1): [2355, 1],
    (2371, 1): [2369, 1],
    (2377, 1): [2372, 1],
    (2381, 1): [2378, 1],
    (2383, 1): [2378, 1],
    (2389, 1): [2387, 1],
    (2393, 1): [2390, 1],
    (2399, 1): [2388, 1],
    (2411, 1): [2405, 1],
    (2417, 1): [2414, 1],
    (2423, 1): [2418, 1],
    (2437, 1): [2435, 1],
    (2441, 1): [2435, 1],
    (2447, 1): [2442, 1],
    (2459, 1): [2457, 1],
    (2467, 1): [2465, 1],
    (2473, 1): [2468, 1],
    (2477, 1): [2475, 1],
    (2503, 1): [2500, 1],
    (2521, 1): [2504, 1],
    (2531, 1): [2529, 1],
    (2539, 1): [2537, 1],
    (2543, 1): [2538, 1],
    (2549, 1): [2547, 1],
    (2551, 1): [2545, 1],
    (2557, 1): [2555, 1],
    (2579, 1): [2577, 1],
    (2591, 1): [2584, 1],
    (2593, 1): [2586, 1],
    (2609, 1): [2606, 1],
    (2617, 1): [2612, 1],
    (2621, 1): [2619, 1],
    (2633, 1): [2630, 1],
    (2647, 1): [2644, 1],
    (2657, 1): [2654, 1],
    (2659, 1): [2657, 1],
    (2663, 1): [2658, 1],
    (2671, 1): [2664, 1],
    (2677, 1): [2675, 1],
    (2683, 1): [2681, 1],
    (2687, 1): [2682, 1],
    (2689, 1): [2670, 1],
    (2693, 1): [2691, 1],
    (2699, 1): [2697, 1],
    (2707, 1): [2705, 1],
    (2711, 1): [2704, 1],
    (2713, 1): [2708, 1],
    (2719, 1): [2716, 1],
    (2729, 1): [2726, 1],
    (2731, 1): [2728, 1],
    (2741, 1): [2739, 1],
    (2749, 1): [2743, 1],
    (2753, 1): [2750, 1],
    (2767, 1): [2764, 1],
    (2777, 1): [2774, 1],
    (2789, 1): [2787, 1],
    (2791, 1): [2785, 1],
    (2797, 1): [2795, 1],
    (2801, 1): [2798, 1],
    (2803, 1): [2801, 1],
    (2819, 1): [2817, 1],
    (2833, 1): [2828, 1],
    (2837, 1): [2835, 1],
    (2843, 1): [2841, 1],
    (2851, 1): [2849, 1],
    (2857, 1): [2846, 1],
    (2861, 1): [2859, 1],
    (2879, 1): [2872, 1],
    (2887, 1): [2882, 1],
    (2897, 1): [2894, 1],
    (2903, 1): [2898, 1],
    (2909, 1): [2907, 1],
    (2917, 1): [2912, 1],
    (2927, 1): [2922, 1],
    (2939, 1): [2937, 1],
    (2953, 1): [2940, 1],
    (2957, 1): [2955, 1],
    (2963, 1): [2961, 1],
    (2969, 1): [2966, 1],
    (2971, 1): [2961, 1],
    (2999, 1): [2982, 1],
    (3001, 1): [2987, 1],
    (3011, 1): [3009, 1],
    (3019, 1): [3017, 1],
    (3023, 1): [3018, 1],
    (3037, 1): [3035, 1],
    (3041, 1): [3038, 1],
    (3049, 1): [3038, 1],
    (3061, 1): [3055, 1],
    (3067, 1): [3065, 1],
    (3079, 1): [3073, 1],
    (3083, 1): [3081, 1],
    (3089, 1): [3086, 1],
    (3109, 1): [3103, 1],
    (3119, 1): [3112, 1],
    (3121, 1): [3114, 1],
    (3137, 1): [3134, 1],
    (3163, 1): [3160, 1],
    (3167, 1): [3162, 1],
    (3169, 1): [3162, 1],
    (3181, 1): [3174, 1],
    (3187, 1): [3185, 1],
    (3191, 1): [3180, 1],
    (3203, 1): [3201, 1],
    (3209, 1): [3206, 1],
    (3217, 1): [3212, 1],
    (3221, 1): [3211, 1],
    (3229, 1): [3223, 1],
    (3251, 1): [3245, 1],
    (3253, 1): [3251, 1],
    (3257, 1): [3254, 1],
    (3259, 1): [3256, 1],
    (3271, 1): [3268, 1],
    (3299, 1): [3297, 1],
    (3301, 1): [3295, 1],
    (3307, 1): [3305, 1],
    (3313, 1): [3303, 1],
    (3319, 1): [3313, 1],
    (3323, 1): [3321, 1],
    (3329, 1): [3326, 1],
    (3331, 1): [3328, 1],
    (3343, 1): [3338, 1],
    (3347, 1): [3345, 1],
    (3359, 1): [3348, 1],
    (3361, 1): [3339, 1],
    (3371, 1): [3369, 1],
    (3373, 1): [3368, 1],
    (3389, 1): [3386, 1],
    (3391, 1): [3388, 1],
    (3407, 1): [3402, 1],
    (3413, 1): [3411, 1],
    (3433, 1): [3428, 1],
    (3449, 1): [3446, 1],
    (3457, 1): [3450, 1],
    (3461, 1): [3459, 1],
    (3463, 1): [3460, 1],
    (3467, 1): [3465, 1],
    (3469, 1): [3467, 1],
    (3491, 1): [3489, 1],
    (3499, 1): [3497, 1],
    (3511, 1): [3504, 1],
    (3517, 1): [3515, 1],
    (3527, 1): [3522, 1],
    (3529, 1): [3512, 1],
    (3533, 1): [3531, 1],
    (3539, 1): [3537, 1],
    (3541, 1): [3534, 1],
    (3547, 1): [3545, 1],
    (3557, 1): [3555, 1],
    (3559, 1): [3556, 1],
    (3571, 1): [3569, 1],
    (3581, 1): [3579, 1],
    (3583, 1): [3580, 1],
    (3593, 1): [3590, 1],
    (3607, 1): [3602, 1],
    (3613, 1): [3611, 1],
    (3617, 1): [3614, 1],
    (3623, 1): [3618, 1],
    (3631, 1): [3616, 1],
    (3637, 1): [3635, 1],
    (3643, 1): [3641, 1],
    (3659, 1): [3657, 1],
    (3671, 1): [3658, 1],
    (3673, 1): [3668, 1],
    (3677, 1): [3675, 1],
    (3691, 1): [3689, 1],
    (3697, 1): [3692, 1],
    (3701, 1): [3699, 1],
    (3709, 1): [3707, 1],
    (3719, 1): [3712, 1],
    (3727, 1): [3724, 1],
    (3733, 1): [3731, 1],
    (3739, 1): [3732, 1],
    (3761, 1): [3758, 1],
    (3767, 1): [3762, 1],
    (3769, 1): [3762, 1],
    (3779, 1): [3777, 1],
    (3793, 1): [3788, 1],
    (3797, 1): [3795, 1],
    (3803, 1): [3801, 1],
    (3821, 1): [3818, 1],
    (3823, 1): [3820, 1],
    (3833, 1): [3830, 1],
    (3847, 1): [3842, 1],
    (3851, 1): [3849, 1],
    (3853, 1): [3851, 1],
    (3863, 1): [3858, 1],
    (3877, 1): [3875, 1],
    (3881, 1): [3868, 1],
    (3889, 1): [3878, 1],
    (3907, 1): [3905, 1],
    (3911, 1): [3898, 1],
    (3917, 1): [3915, 1],
    (3919, 1): [3916, 1],
    (3923, 1): [3921, 1],
    (3929, 1): [3926, 1],
    (3931, 1): [3929, 1],
    (3943, 1): [3940, 1],
    (3947, 1): [3945, 1],
    (3967, 1): [3961, 1],
    (3989, 1): [3987, 1],
    (4001, 1): [3998, 1],
    (4003, 1): [4001, 1],
    (4007, 1): [4002, 1],
    (4013, 1): [4011, 1],
    (4019, 1): [4017, 1],
    (4021, 1): [4019, 1],
    (4027, 1): [4024, 1],
    (4049, 1): [4046, 1],
    (4051, 1): [4041, 1],
    (4057, 1): [4052, 1],
    (4073, 1): [4070, 1],
    (4079, 1): [4068, 1],
    (4091, 1): [4089, 1],
    (4093, 1): [4091, 1],
    (4099, 1): [4097, 1],
    (4111, 1): [4099, 1],
    (4127, 1): [4122, 1],
    (4129, 1): [4116, 1],
    (4133, 1): [4131, 1],
    (4139, 1): [4137, 1],
    (4153, 1): [4148, 1],
    (4157, 1): [4155, 1],
    (4159, 1): [4156, 1],
    (4177, 1): [4172, 1],
    (4201, 1): [4190, 1],
    (4211, 1): [4205, 1],
    (4217, 1): [4214, 1],
    (4219, 1): [4217, 1],
    (4229, 1): [4227, 1],
    (4231, 1): [4228, 1],
    (4241, 1): [4238, 1],
    (4243, 1): [4241, 1],
    (4253, 1): [4251, 1],
    (4259, 1): [4257, 1],
    (4261, 1): [4259, 1],
    (4271, 1): [4264, 1],
    (4273, 1): [4268, 1],
    (4283, 1): [4281, 1],
    (4289, 1): [4286, 1],
    (4297, 1): [4292, 1],
    (4327, 1): [4324, 1],
    (4337, 1): [4334, 1],
    (4339, 1): [4329, 1],
    (4349, 1): [4347, 1],
    (4357, 1): [4355, 1],
    (4363, 1): [4361, 1],
    (4373, 1): [4371, 1],
    (4391, 1): [4377, 1],
    (4397, 1): [4395, 1],
    (4409, 1): [4406, 1],
    (4421, 1): [4418, 1],
    (4423, 1): [4420, 1],
    (4441, 1): [4420, 1],
    (4447, 1): [4444, 1],
    (4451, 1): [4449, 1],
    (4457, 1): [4454, 1],
    (4463, 1): [4458, 1],
    (4481, 1): [4478, 1],
    (4483, 1): [4481, 1],
    (4493, 1): [4491, 1],
    (4507, 1): [4505, 1],
    (4513, 1): [4506, 1],
    (4517, 1): [4515, 1],
    (4519, 1): [4516, 1],
    (4523, 1): [4518, 1],
    (4547, 1): [4545, 1],
    (4549, 1): [4543, 1],
    (4561, 1): [4550, 1],
    (4567, 1): [4564, 1],
    (4583, 1): [4578, 1],
    (4591, 1): [4580, 1],
    (4597, 1): [4592, 1],
    (4603, 1): [4601, 1],
    (4621, 1): [4619, 1],
    (4637, 1): [4635, 1],
    (4639, 1): [4636, 1],
    (4643, 1): [4638, 1],
    (4649, 1): [4646, 1],
    (4651, 1): [4648, 1],
    (4657, 1): [4642, 1],
    (4663, 1): [4660, 1],
    (4673, 1): [4670, 1],
    (4679, 1): [4668, 1],
    (4691, 1): [4689, 1],
    (4703, 1): [4698, 1],
    (4721, 1): [4715, 1],
    (4723, 1): [4721, 1],
    (4729, 1): [4712, 1],
    (4733, 1): [4728, 1],
    (4751, 1): [4732, 1],
    (4759, 1): [4756, 1],
    (4783, 1): [4777, 1],
    (4787, 1): [4785, 1],
    (4789, 1): [4787, 1],
    (4793, 1): [4790, 1],
    (4799, 1): [4792, 1],
    (4801, 1): [4794, 1],
    (4813, 1): [4811, 1],
    (4817, 1): [4814, 1],
    (4831, 1): [4828, 1],
    (4861, 1): [4850, 1],
    (4871, 1): [4860, 1],
    (4877, 1): [4875, 1],
    (4889, 1): [4886, 1],
    (4903, 1): [4900, 1],
    (4909, 1): [4903, 1],
    (4919, 1): [4906, 1],
    (4931, 1): [4925, 1],
    (4933, 1): [4931, 1],
    (4937, 1): [4934, 1],
    (4943, 1): [4936, 1],
    (4951, 1): [4945, 1],
    (4957, 1): [4955, 1],
    (4967, 1): [4962, 1],
    (4969, 1): [4958, 1],
    (4973, 1): [4971, 1],
    (4987, 1): [4985, 1],
    (4993, 1): [4988, 1],
    (4999, 1): [4996, 1],
    (5003, 1): [5001, 1],
    (5009, 1): [5006, 1],
    (5011, 1): [5009, 1],
    (5021, 1): [5018, 1],
    (5023, 1): [5020, 1],
    (5039, 1): [5028, 1],
    (5051, 1): [5049, 1],
    (5059, 1): [5057, 1],
    (5077, 1): [5075, 1],
    (5081, 1): [5078, 1],
    (5087, 1): [5082, 1],
    (5099, 1): [5097, 1],
    (5101, 1): [5095, 1],
    (5107, 1): [5105, 1],
    (5113, 1): [5094, 1],
    (5119, 1): [5116, 1],
    (5147, 1): [5145, 1],
    (5153, 1): [5148, 1],
    (5167, 1): [5161, 1],
    (5171, 1): [5169, 1],
    (5179, 1): [5177, 1],
    (5189, 1): [5187, 1],
    (5197, 1): [5190, 1],
    (5209, 1): [5192, 1],
    (5227, 1): [5225, 1],
    (5231, 1): [5224, 1],
    (5233, 1): [5223, 1],
    (5237, 1): [5234, 1],
    (5261, 1): [5259, 1],
    (5273, 1): [5270, 1],
    (5279, 1): [5272, 1],
    (5281, 1): [5274, 1],
    (5297, 1): [5294, 1],
    (5303, 1): [5298, 1],
    (5309, 1): [5307, 1],
    (5323, 1): [5318, 1],
    (5333, 1): [5331, 1],
    (5347, 1): [5344, 1],
    (5351, 1): [5340, 1],
    (5381, 1): [5378, 1],
    (5387, 1): [5385, 1],
    (5393, 1): [5390, 1],
    (5399, 1): [5392, 1],
    (5407, 1): [5404, 1],
    (5413, 1): [5408, 1],
    (5417, 1): [5414, 1],
    (5419, 1): [5416, 1],
    (5431, 1): [5428, 1],
    (5437, 1): [5432, 1],
    (5441, 1): [5438, 1],
    (5443, 1): [5441, 1],
    (5449, 1): [5442, 1],
    (5471, 1): [5464, 1],
    (5477, 1): [5475, 1],
    (5479, 1): [5476, 1],
    (5483, 1): [5481, 1],
    (5501, 1): [5499, 1],
    (5503, 1): [5500, 1],
    (5507, 1): [5505, 1],
    (5519, 1): [5506, 1],
    (5521, 1): [5510, 1],
    (5527, 1): [5522, 1],
    (5531, 1): [5521, 1],
    (5557, 1): [5555, 1],
    (5563, 1): [5561, 1],
    (5569, 1): [5556, 1],
    (5573, 1): [5571, 1],
    (5581, 1): [5575, 1],
    (5591, 1): [5580, 1],
    (5623, 1): [5618, 1],
    (5639, 1): [5632, 1],
    (5641, 1): [5627, 1],
    (5647, 1): [5644, 1],
    (5651, 1): [5649, 1],
    (5653, 1): [5648, 1],
    (5657, 1): [5654, 1],
    (5659, 1): [5657, 1],
    (5669, 1): [5666, 1],
    (5683, 1): [5681, 1],
    (5689, 1): [5678, 1],
    (5693, 1): [5691, 1],
    (5701, 1): [5699, 1],
    (5711, 1): [5692, 1],
    (5717, 1): [5715, 1],
    (5737, 1): [5732, 1],
    (5741, 1): [5739, 1],
    (5743, 1): [5733, 1],
    (5749, 1): [5747, 1],
    (5779, 1): [5777, 1],
    (5783, 1): [5776, 1],
    (5791, 1): [5785, 1],
    (5801, 1): [5798, 1],
    (5807, 1): [5802, 1],
    (5813, 1): [5811, 1],
    (5821, 1): [5815, 1],
    (5827, 1): [5825, 1],
    (5839, 1): [5833, 1],
    (5843, 1): [5841, 1],
    (5849, 1): [5846, 1],
    (5851, 1): [5849, 1],
    (5857, 1): [5850, 1],
    (5861, 1): [5858, 1],
    (5867, 1): [5862, 1],
    (5869, 1): [5867, 1],
    (5879, 1): [5868, 1],
    (5881, 1): [5850, 1],
    (5897, 1): [5894, 1],
    (5903, 1): [5898, 1],
    (5923, 1): [5921, 1],
    (5927, 1): [5922, 1],
    (5939, 1): [5937, 1],
    (5953, 1): [5946, 1],
    (5981, 1): [5978, 1],
    (5987, 1): [5985, 1],
    (6007, 1): [6004, 1],
    (6011, 1): [6009, 1],
    (6029, 1): [6027, 1],
    (6037, 1): [6032, 1],
    (6043, 1): [6038, 1],
    (6047, 1): [6042, 1],
    (6053, 1): [6051, 1],
    (6067, 1): [6065, 1],
    (6073, 1): [6063, 1],
    (6079, 1): [6062, 1],
    (6089, 1): [6086, 1],
    (6091, 1): [6084, 1],
    (6101, 1): [6099, 1],
    (6113, 1): [6110, 1],
    (6121, 1): [6114, 1],
    (6131, 1): [6129, 1],
    (6133, 1): [6128, 1],
    (6143, 1): [6138, 1],
    (6151, 1): [6148, 1],
    (6163, 1): [6160, 1],
    (6173, 1): [6171, 1],
    (6197, 1): [6195, 1],
    (6199, 1): [6196, 1],
    (6203, 1): [6201, 1],
    (6211, 1): [6209, 1],
    (6217, 1): [6212, 1],
    (6221, 1): [6218, 1],
    (6229, 1): [6227, 1],
    (6247, 1): [6242, 1],
    (6257, 1): [6254, 1],
    (6263, 1): [6258, 1],
    (6269, 1): [6267, 1],
    (6271, 1): [6260, 1],
    (6277, 1): [6275, 1],
    (6287, 1): [6280, 1],
    (6299, 1): [6297, 1],
    (6301, 1): [6291, 1],
    (6311, 1): [6304, 1],
    (6317, 1): [6315, 1],
    (6323, 1): [6321, 1],
    (6329, 1): [6326, 1],
    (6337, 1): [6327, 1],
    (6343, 1): [6340, 1],
    (6353, 1): [6350, 1],
    (6359, 1): [6346, 1],
    (6361, 1): [6342, 1],
    (6367, 1): [6364, 1],
    (6373, 1): [6371, 1],
    (6379, 1): [6377, 1],
    (6389, 1): [6387, 1],
    (6397, 1): [6395, 1],
    (6421, 1): [6415, 1],
    (6427, 1): [6424, 1],
    (6449, 1): [6446, 1],
    (6451, 1): [6448, 1],
    (6469, 1): [6467, 1],
    (6473, 1): [6470, 1],
    (6481, 1): [6474, 1],
    (6491, 1): [6489, 1],
    (6521, 1): [6515, 1],
    (6529, 1): [6522, 1],
    (6547, 1): [6545, 1],
    (6551, 1): [6534, 1],
    (6553, 1): [6543, 1],
    (6563, 1): [6558, 1],
    (6569, 1): [6566, 1],
    (6571, 1): [6568, 1],
    (6577, 1): [6572, 1],
    (6581, 1): [6567, 1],
    (6599, 1): [6586, 1],
    (6607, 1): [6604, 1],
    (6619, 1): [6617, 1],
    (6637, 1): [6635, 1],
    (6653, 1): [6651, 1],
    (6659, 1): [6657, 1],
    (6661, 1): [6655, 1],
    (6673, 1): [6668, 1],
    (6679, 1): [6672, 1],
    (6689, 1): [6686, 1],
    (6691, 1): [6689, 1],
    (6701, 1): [6699, 1],
    (6703, 1): [6698, 1],
    (6709, 1): [6707, 1],
    (6719, 1): [6708, 1],
    (6733, 1): [6731, 1],
    (6737, 1): [6734, 1],
    (6761, 1): [6758, 1],
    (6763, 1): [6761, 1],
    (6779, 1): [6777, 1],
    (6781, 1): [6779, 1],
    (6791, 1): [6784, 1],
    (6793, 1): [6783, 1],
    (6803, 1): [6801, 1],
    (6823, 1): [6820, 1],
    (6827, 1): [6825, 1],
    (6829, 1): [6827, 1],
    (6833, 1): [6830, 1],
    (6841, 1): [6819, 1],
    (6857, 1): [6854, 1],
    (6863, 1): [6858, 1],
    (6869, 1): [6867, 1],
    (6871, 1): [6868, 1],
    (6883, 1): [6881, 1],
    (6899, 1): [6897, 1],
    (6907, 1): [6905, 1],
    (6911, 1): [6904, 1],
    (6917, 1): [6915, 1],
    (6947, 1): [6945, 1],
    (6949, 1): [6947, 1],
    (6959, 1): [6952, 1],
    (6961, 1): [6948, 1],
    (6967, 1): [6962, 1],
    (6971, 1): [6969, 1],
    (6977, 1): [6974, 1],
    (6983, 1): [6978, 1],
    (6991, 1): [6985, 1],
    (6997, 1): [6992, 1],
    (7001, 1): [6998, 1],
    (7013, 1): [7011, 1],
    (7019, 1): [7017, 1],
    (7027, 1): [7025, 1],
    (7039, 1): [7036, 1],
    (7043, 1): [7041, 1],
    (7057, 1): [7052, 1],
    (7069, 1): [7067, 1],
    (7079, 1): [7072, 1],
    (7103, 1): [7098, 1],
    (7109, 1): [7107, 1],
    (7121, 1): [7118, 1],
    (7127, 1): [7122, 1],
    (7129, 1): [7122, 1],
    (7151, 1): [7144, 1],
    (7159, 1): [7156, 1],
    (7177, 1): [7167, 1],
    (7187, 1): [7185, 1],
    (7193, 1): [7190, 1],
    (7207, 1): [7204, 1],
    (7211, 1): [7209, 1],
    (7213, 1): [7208, 1],
    (7219, 1): [7217, 1],
    (7229, 1): [7227, 1],
    (7237, 1): [7235, 1],
    (7243, 1): [7241, 1],
    (7247, 1): [7242, 1],
    (7253, 1): [7251, 1],
    (7283, 1): [7281, 1],
    (7297, 1): [7292, 1],
    (7307, 1): [7305, 1],
    (7309, 1): [7303, 1],
    (7321, 1): [7314, 1],
    (7331, 1): [7329, 1],
    (7333, 1): [7327, 1],
    (7349, 1): [7347, 1],
    (7351, 1): [7345, 1],
    (7369, 1): [7362, 1],
    (7393, 1): [7388, 1],
    (7411, 1): [7409, 1],
    (7417, 1): [7412, 1],
    (7433, 1): [7430, 1],
    (7451, 1): [7449, 1],
    (7457, 1): [7454, 1],
    (7459, 1): [7457, 1],
    (7477, 1): [7475, 1],
    (7481, 1): [7475, 1],
    (7487, 1): [7482, 1],
    (7489, 1): [7482, 1],
    (7499, 1): [7497, 1],
    (7507, 1): [7505, 1],
    (7517, 1): [7515, 1],
    (7523, 1): [7521, 1],
    (7529, 1): [7526, 1],
    (7537, 1): [7530, 1],
    (7541, 1): [7539, 1],
    (7547, 1): [7545, 1],
    (7549, 1): [7547, 1],
    (7559, 1): [7546, 1],
    (7561, 1): [7548, 1],
    (7573, 1): [7571, 1],
    (7577, 1): [7574, 1],
    (7583, 1): [7578, 1],
    (7589, 1): [7587, 1],
    (7591, 1): [7585, 1],
    (7603, 1): [7601, 1],
    (7607, 1): [7602, 1],
    (7621, 1): [7619, 1],
    (7639, 1): [7632, 1],
    (7643, 1): [7641, 1],
    (7649, 1): [7646, 1],
    (7669, 1): [7667, 1],
    (7673, 1): [7670, 1],
    (7681, 1): [7664, 1],
    (7687, 1): [7681, 1],
    (7691, 1): [7689, 1],
    (7699, 1): [7696, 1],
    (7703, 1): [7698, 1],
    (7717, 1): [7715, 1],
    (7723, 1): [7720, 1],
    (7727, 1): [7722, 1],
    (7741, 1): [7734, 1],
    (7753, 1): [7743, 1],
    (7757, 1): [7755, 1],
    (7759, 1): [7756, 1],
    (7789, 1): [7787, 1],
    (7793, 1): [7790, 1],
    (7817, 1): [7814, 1],
    (7823, 1): [7818, 1],
    (7829, 1): [7827, 1],
    (7841, 1): [7829, 1],
    (7853, 1): [7851, 1],
    (7867, 1): [7864, 1],
    (7873, 1): [7868, 1],
    (7877, 1): [7875, 1],
    (7879, 1): [7876, 1],
    (7883, 1): [7881, 1],
    (7901, 1): [7899, 1],
    (7907, 1): [7905, 1],
    (7919, 1): [7912, 1],
    (7927, 1): [7924, 1],
    (7933, 1): [7931, 1],
    (7937, 1): [7934, 1],
    (7949, 1): [7947, 1],
    (7951, 1): [7945, 1],
    (7963, 1): [7958, 1],
    (7993, 1): [7988, 1],
    (8009, 1): [8006, 1],
    (8011, 1): [7997, 1],
    (8017, 1): [8012, 1],
    (8039, 1): [8028, 1],
    (8053, 1): [8051, 1],
    (8059, 1): [8056, 1],
    (8069, 1): [8067, 1],
    (8081, 1): [8078, 1],
    (8087, 1): [8082, 1],
    (8089, 1): [8072, 1],
    (8093, 1): [8091, 1],
    (8101, 1): [8095, 1],
    (8111, 1): [8100, 1],
    (8117, 1): [8115, 1],
    (8123, 1): [8121, 1],
    (8147, 1): [8145, 1],
    (8161, 1): [8154, 1],
    (8167, 1): [8164, 1],
    (8171, 1): [8169, 1],
    (8179, 1): [8177, 1],
    (8191, 1): [8174, 1],
    (8209, 1): [8202, 1],
    (8219, 1): [8217, 1],
    (8221, 1): [8219, 1],
    (8231, 1): [8220, 1],
    (8233, 1): [8223, 1],
    (8237, 1): [8235, 1],
    (8243, 1): [8241, 1],
    (8263, 1): [8260, 1],
    (8269, 1): [8267, 1],
    (8273, 1): [8270, 1],
    (8287, 1): [8284, 1],
    (8291, 1): [8289, 1],
    (8293, 1): [8291, 1],
    (8297, 1): [8294, 1],
    (8311, 1): [8308, 1],
    (8317, 1): [8311, 1],
    (8329, 1): [8322, 1],
    (8353, 1): [8348, 1],
    (8363, 1): [8361, 1],
    (8369, 1): [8366, 1],
    (8377, 1): [8372, 1],
    (8387, 1): [8385, 1],
    (8389, 1): [8383, 1],
    (8419, 1): [8416, 1],
    (8423, 1): [8418, 1],
    (8429, 1): [8427, 1],
    (8431, 1): [8428, 1],
    (8443, 1): [8441, 1],
    (8447, 1): [8442, 1],
    (8461, 1): [8455, 1],
    (8467, 1): [8465, 1],
    (8501, 1): [8494, 1],
    (8513, 1): [8508, 1],
    (8521, 1): [8508, 1],
    (8527, 1): [8522, 1],
    (8537, 1): [8534, 1],
    (8539, 1): [8537, 1],
    (8543, 1): [8538, 1],
    (8563, 1): [8561, 1],
    (8573, 1): [8571, 1],
    (8581, 1): [8575, 1],
    (8597, 1): [8595, 1],
    (8599, 1): [8596, 1],
    (8609, 1): [8606, 1],
    (8623, 1): [8620, 1],
    (8627, 1): [8625, 1],
    (8629, 1): [8623, 1],
    (8641, 1): [8624, 1],
    (8647, 1): [8644, 1],
    (8663, 1): [8658, 1],
    (8669, 1): [8667, 1],
    (8677, 1): [8675, 1],
    (8681, 1): [8666, 1],
    (8689, 1): [8676, 1],
    (8693, 1): [8691, 1],
    (8699, 1): [8697, 1],
    (8707, 1): [8702, 1],
    (8713, 1): [8708, 1],
    (8719, 1): [8716, 1],
    (8731, 1): [8729, 1],
    (8737, 1): [8732, 1],
    (8741, 1): [8739, 1],
    (8747, 1): [8745, 1],
    (8753, 1): [8750, 1],
    (8761, 1): [8738, 1],
    (8779, 1): [8768, 1],
    (8783, 1): [8778, 1],
    (8803, 1): [8801, 1],
    (8807, 1): [8802, 1],
    (8819, 1): [8817, 1],
    (8821, 1): [8819, 1],
    (8831, 1): [8824, 1],
    (8837, 1): [8835, 1],
    (8839, 1): [8836, 1],
    (8849, 1): [8846, 1],
    (8861, 1): [8859, 1],
    (8863, 1): [8860, 1],
    (8867, 1): [8865, 1],
    (8887, 1): [8884, 1],
    (8893, 1): [8888, 1],
    (8923, 1): [8921, 1],
    (8929, 1): [8918, 1],
    (8933, 1): [8931, 1],
    (8941, 1): [8935, 1],
    (8951, 1): [8938, 1],
    (8963, 1): [8961, 1],
    (8969, 1): [8966, 1],
    (8971, 1): [8969, 1],
    (8999, 1): [8992, 1],
    (9001, 1): [8994, 1],
    (9007, 1): [9004, 1],
    (9011, 1): [9009, 1],
    (9013, 1): [9008, 1],
    (9029, 1): [9027, 1],
    (9041, 1): [9038, 1],
    (9043, 1): [9040, 1],
    (9049, 1): [9042, 1],
    (9059, 1): [9057, 1],
    (9067, 1): [9064, 1],
    (9091, 1): [9088, 1],
    (9103, 1): [9097, 1],
    (9109, 1): [9099, 1],
    (9127, 1): [9124, 1],
    (9133, 1): [9127, 1],
    (9137, 1): [9134, 1],
    (9151, 1): [9148, 1],
    (9157, 1): [9151, 1],
    (9161, 1): [9158, 1],
    (9173, 1): [9171, 1],
    (9181, 1): [9179, 1],
    (9187, 1): [9184, 1],
    (9199, 1): [9196, 1],
    (9203, 1): [9201, 1],
    (9209, 1): [9206, 1],
    (9221, 1): [9219, 1],
    (9227, 1): [9225, 1],
    (9239, 1): [9220, 1],
    (9241, 1): [9228, 1],
    (9257, 1): [9254, 1],
    (9277, 1): [9272, 1],
    (9281, 1): [9278, 1],
    (9283, 1): [9281, 1],
    (9293, 1): [9291, 1],
    (9311, 1): [9304, 1],
    (9319, 1): [9316, 1],
    (9323, 1): [9321, 1],
    (9337, 1): [9332, 1],
    (9341, 1): [9339, 1],
    (9343, 1): [9338, 1],
    (9349, 1): [9347, 1],
    (9371, 1): [9369, 1],
    (9377, 1): [9374, 1],
    (9391, 1): [9388, 1],
    (9397, 1): [9395, 1],
    (9403, 1): [9400, 1],
    (9413, 1): [9410, 1],
    (9419, 1): [9417, 1],
    (9421, 1): [9419, 1],
    (9431, 1): [9424, 1],
    (9433, 1): [9428, 1],
    (9437, 1): [9435, 1],
    (9439, 1): [9417, 1],
    (9461, 1): [9458, 1],
    (9463, 1): [9460, 1],
    (9467, 1): [9465, 1],
    (9473, 1): [9470, 1],
    (9479, 1): [9472, 1],
    (9491, 1): [9489, 1],
    (9497, 1): [9494, 1],
    (9511, 1): [9508, 1],
    (9521, 1): [9518, 1],
    (9533, 1): [9531, 1],
    (9539, 1): [9537, 1],
    (9547, 1): [9545, 1],
    (9551, 1): [9540, 1],
    (9587, 1): [9585, 1],
    (9601, 1): [9588, 1],
    (9613, 1): [9611, 1],
    (9619, 1): [9617, 1],
    (9623, 1): [9618, 1],
    (9629, 1): [9627, 1],
    (9631, 1): [9628, 1],
    (9643, 1): [9641, 1],
    (9649, 1): [9642, 1],
    (9661, 1): [9659, 1],
    (9677, 1): [9675, 1],
    (9679, 1): [9676, 1],
    (9689, 1): [9686, 1],
    (9697, 1): [9687, 1],
    (9719, 1): [9702, 1],
    (9721, 1): [9714, 1],
    (9733, 1): [9731, 1],
    (9739, 1): [9736, 1],
    (9743, 1): [9738, 1],
    (9749, 1): [9747, 1],
    (9767, 1): [9762, 1],
    (9769, 1): [9756, 1],
    (9781, 1): [9775, 1],
    (9787, 1): [9784, 1],
    (9791, 1): [9780, 1],
    (9803, 1): [9801, 1],
    (9811, 1): [9808, 1],
    (9817, 1): [9812, 1],
    (9829, 1): [9819, 1],
    (9833, 1): [9830, 1],
    (9839, 1): [9832, 1],
    (9851, 1): [9849, 1],
    (9857, 1): [9852, 1],
    (9859, 1): [9857, 1],
    (9871, 1): [9868, 1],
    (9883, 1): [9881, 1],
    (9887, 1): [9882, 1],
    (9901, 1): [9899, 1],
    (9907, 1): [9905, 1],
    (9923, 1): [9921, 1],
    (9929, 1): [9926, 1],
    (9931, 1): [9921, 1],
    (9941, 1): [9939, 1],
    (9949, 1): [9947, 1],
    (9967, 1): [9964, 1],
    (9973, 1): [9962, 1],
    (10007, 1): [10002, 1],
    (10009, 1): [9998, 1],
    (10037, 1): [10035, 1],
    (10039, 1): [10036, 1],
    (10061, 1): [10058, 1],
    (10067, 1): [10065, 1],
    (10069, 1): [10067, 1],
    (10079, 1): [10068, 1],
    (10091, 1): [10089, 1],
    (10093, 1): [10091, 1],
    (10099, 1): [10097, 1],
    (10103, 1): [10098, 1],
    (10111, 1): [10099, 1],
    (10133, 1): [10131, 1],
    (10139, 1): [10137, 1],
    (10141, 1): [10139, 1],
    (10151, 1): [10144, 1],
    (10159, 1): [10156, 1],
    (10163, 1): [10161, 1],
    (10169, 1): [10166, 1],
    (10177, 1): [10170, 1],
    (10181, 1): [10179, 1],
    (10193, 1): [10190, 1],
    (10211, 1): [10205, 1],
    (10223, 1): [10218, 1],
    (10243, 1): [10236, 1],
    (10247, 1): [10242, 1],
    (10253, 1): [10251, 1],
    (10259, 1): [10257, 1],
    (10267, 1): [10265, 1],
    (10271, 1): [10264, 1],
    (10273, 1): [10263, 1],
    (10289, 1): [10286, 1],
    (10301, 1): [10299, 1],
    (10303, 1): [10300, 1],
    (10313, 1): [10310, 1],
    (10321, 1): [10314, 1],
    (10331, 1): [10329, 1],
    (10333, 1): [10328, 1],
    (10337, 1): [10334, 1],
    (10343, 1): [10338, 1],
    (10357, 1): [10355, 1],
    (10369, 1): [10356, 1],
    (10391, 1): [10372, 1],
    (10399, 1): [10393, 1],
    (10427, 1): [10425, 1],
    (10429, 1): [10422, 1],
    (10433, 1): [10430, 1],
    (10453, 1): [10448, 1],
    (10457, 1): [10454, 1],
    (10459, 1): [10457, 1],
    (10463, 1): [10458, 1],
    (10477, 1): [10475, 1],
    (10487, 1): [10482, 1],
    (10499, 1): [10497, 1],
    (10501, 1): [10499, 1],
    (10513, 1): [10506, 1],
    (10529, 1): [10526, 1],
    (10531, 1): [10528, 1],
    (10559, 1): [10536, 1],
    (10567, 1): [10561, 1],
    (10589, 1): [10587, 1],
    (10597, 1): [10592, 1],
    (10601, 1): [10598, 1],
    (10607, 1): [10602, 1],
    (10613, 1): [10611, 1],
    (10627, 1): [10622, 1],
    (10631, 1): [10620, 1],
    (10639, 1): [10633, 1],
    (10651, 1): [10644, 1],
    (10657, 1): [10650, 1],
    (10663, 1): [10660, 1],
    (10667, 1): [10665, 1],
    (10687, 1): [10682, 1],
    (10691, 1): [10689, 1],
    (10709, 1): [10707, 1],
    (10711, 1): [10708, 1],
    (10723, 1): [10721, 1],
    (10729, 1): [10722, 1],
    (10733, 1): [10731, 1],
    (10739, 1): [10733, 1],
    (10753, 1): [10742, 1],
    (10771, 1): [10768, 1],
    (10781, 1): [10771, 1],
    (10789, 1): [10787, 1],
    (10799, 1): [10780, 1],
    (10831, 1): [10824, 1],
    (10837, 1): [10835, 1],
    (10847, 1): [10842, 1],
    (10853, 1): [10851, 1],
    (10859, 1): [10857, 1],
    (10861, 1): [10859, 1],
    (10867, 1): [10865, 1],
    (10883, 1): [10881, 1],
    (10889, 1): [10886, 1],
    (10891, 1): [10889, 1],
    (10903, 1): [10900, 1],
    (10909, 1): [10907, 1],
    (10937, 1): [10934, 1],
    (10939, 1): [10936, 1],
    (10949, 1): [10947, 1],
    (10957, 1): [10952, 1],
    (10973, 1): [10971, 1],
    (10979, 1): [10977, 1],
    (10987, 1): [10985, 1],
    (10993, 1): [10986, 1],
    (11003, 1): [11001, 1],
    (11027, 1): [11025, 1],
    (11047, 1): [11044, 1],
    (11057, 1): [11054, 1],
    (11059, 1): [11049, 1],
    (11069, 1): [11067, 1],
    (11071, 1): [11068, 1],
    (11083, 1): [11081, 1],
    (11087, 1): [11082, 1],
    (11093, 1): [11091, 1],
    (11113, 1): [11100, 1],
    (11117, 1): [11114, 1],
    (11119, 1): [11116, 1],
    (11131, 1): [11129, 1],
    (11149, 1): [11139, 1],
    (11159, 1): [11152, 1],
    (11161, 1): [11154, 1],
    (11171, 1): [11169, 1],
    (11173, 1): [11168, 1],
    (11177, 1): [11174, 1],
    (11197, 1): [11195, 1],
    (11213, 1): [11211, 1],
    (11239, 1): [11236, 1],
    (11243, 1): [11238, 1],
    (11251, 1): [11238, 1],
    (11257, 1): [11247, 1],
    (11261, 1): [11259, 1],
    (11273, 1): [11270, 1],
    (11279, 1): [11272, 1],
    (11287, 1): [11284, 1],
    (11299, 1): [11296, 1],
    (11311, 1): [11308, 1],
    (11317, 1): [11315, 1],
    (11321, 1): [11318, 1],
    (11329, 1): [11322, 1],
    (11351, 1): [11344, 1],
    (11353, 1): [11346, 1],
    (11369, 1): [11366, 1],
    (11383, 1): [11378, 1],
    (11393, 1): [11390, 1],
    (11399, 1): [11388, 1],
    (11411, 1): [11404, 1],
    (11423, 1): [11418, 1],
    (11437, 1): [11435, 1],
    (11443, 1): [11441, 1],
    (11447, 1): [11442, 1],
    (11467, 1): [11462, 1],
    (11471, 1): [11460, 1],
    (11483, 1): [11481, 1],
    (11489, 1): [11486, 1],
    (11491, 1): [11488, 1],
    (11497, 1): [11490, 1],
    (11503, 1): [11500, 1],
    (11519, 1): [11512, 1],
    (11527, 1): [11522, 1],
    (11549, 1): [11547, 1],
    (11551, 1): [11544, 1],
    (11579, 1): [11577, 1],
    (11587, 1): [11585, 1],
    (11593, 1): [11588, 1],
    (11597, 1): [11594, 1],
    (11617, 1): [11607, 1],
    (11621, 1): [11619, 1],
    (11633, 1): [11630, 1],
    (11657, 1): [11654, 1],
    (11677, 1): [11675, 1],
    (11681, 1): [11678, 1],
    (11689, 1): [11682, 1],
    (11699, 1): [11697, 1],
    (11701, 1): [11695, 1],
    (11717, 1): [11715, 1],
    (11719, 1): [11713, 1],
    (11731, 1): [11728, 1],
    (11743, 1): [11740, 1],
    (11777, 1): [11774, 1],
    (11779, 1): [11777, 1],
    (11783, 1): [11778, 1],
    (11789, 1): [11787, 1],
    (11801, 1): [11798, 1],
    (11807, 1): [11802, 1],
    (11813, 1): [11811, 1],
    (11821, 1): [11819, 1],
    (11827, 1): [11825, 1],
    (11831, 1): [11824, 1],
    (11833, 1): [11828, 1],
    (11839, 1): [11836, 1],
    (11863, 1): [11860, 1],
    (11867, 1): [11865, 1],
    (11887, 1): [11884, 1],
    (11897, 1): [11894, 1],
    (11903, 1): [11898, 1],
    (11909, 1): [11907, 1],
    (11923, 1): [11918, 1],
    (11927, 1): [11922, 1],
    (11933, 1): [11931, 1],
    (11939, 1): [11937, 1],
    (11941, 1): [11931, 1],
    (11953, 1): [11948, 1],
    (11959, 1): [11956, 1],
    (11969, 1): [11966, 1],
    (11971, 1): [11961, 1],
    (11981, 1): [11979, 1],
    (11987, 1): [11985, 1],
    (12007, 1): [11994, 1],
    (12011, 1): [12009, 1],
    (12037, 1): [12032, 1],
    (12041, 1): [12038, 1],
    (12043, 1): [12041, 1],
    (12049, 1): [12036, 1],
    (12071, 1): [12060, 1],
    (12073, 1): [12066, 1],
    (12097, 1): [12092, 1],
    (12101, 1): [12098, 1],
    (12107, 1): [12105, 1],
    (12109, 1): [12103, 1],
    (12113, 1): [12110, 1],
    (12119, 1): [12112, 1],
    (12143, 1): [12133, 1],
    (12149, 1): [12147, 1],
    (12157, 1): [12155, 1],
    (12161, 1): [12158, 1],
    (12163, 1): [12158, 1],
    (12197, 1): [12195, 1],
    (12203, 1): [12201, 1],
    (12211, 1): [12209, 1],
    (12227, 1): [12225, 1],
    (12239, 1): [12226, 1],
    (12241, 1): [12234, 1],
    (12251, 1): [12249, 1],
    (12253, 1): [12251, 1],
    (12263, 1): [12258, 1],
    (12269, 1): [12267, 1],
    (12277, 1): [12275, 1],
    (12281, 1): [12278, 1],
    (12289, 1): [12278, 1],
    (12301, 1): [12299, 1],
    (12323, 1): [12321, 1],
    (12329, 1): [12326, 1],
    (12343, 1): [12336, 1],
    (12347, 1): [12345, 1],
    (12373, 1): [12371, 1],
    (12377, 1): [12371, 1],
    (12379, 1): [12377, 1],
    (12391, 1): [12365, 1],
    (12401, 1): [12398, 1],
    (12409, 1): [12402, 1],
    (12413, 1): [12411, 1],
    (12421, 1): [12414, 1],
    (12433, 1): [12420, 1],
    (12437, 1): [12435, 1],
    (12451, 1): [12448, 1],
    (12457, 1): [12447, 1],
    (12473, 1): [12470, 1],
    (12479, 1): [12456, 1],
    (12487, 1): [12484, 1],
    (12491, 1): [12489, 1],
    (12497, 1): [12494, 1],
    (12503, 1): [12498, 1],
    (12511, 1): [12508, 1],
    (12517, 1): [12511, 1],
    (12527, 1): [12522, 1],
    (12539, 1): [12537, 1],
    (12541, 1): [12527, 1],
    (12547, 1): [12545, 1],
    (12553, 1): [12548, 1],
    (12569, 1): [12566, 1],
    (12577, 1): [12567, 1],
    (12583, 1): [12578, 1],
    (12589, 1): [12587, 1],
    (12601, 1): [12590, 1],
    (12611, 1): [12609, 1],
    (12613, 1): [12611, 1],
    (12619, 1): [12617, 1],
    (12637, 1): [12635, 1],
    (12641, 1): [12638, 1],
    (12647, 1): [12642, 1],
    (12653, 1): [12651, 1],
    (12659, 1): [12657, 1],
    (12671, 1): [12657, 1],
    (12689, 1): [12686, 1],
    (12697, 1): [12690, 1],
    (12703, 1): [12700, 1],
    (12713, 1): [12710, 1],
    (12721, 1): [12708, 1],
    (12739, 1): [12737, 1],
    (12743, 1): [12738, 1],
    (12757, 1): [12755, 1],
    (12763, 1): [12761, 1],
    (12781, 1): [12779, 1],
    (12791, 1): [12784, 1],
    (12799, 1): [12786, 1],
    (12809, 1): [12806, 1],
    (12821, 1): [12819, 1],
    (12823, 1): [12820, 1],
    (12829, 1): [12827, 1],
    (12841, 1): [12820, 1],
    (12853, 1): [12848, 1],
    (12889, 1): [12876, 1],
    (12893, 1): [12890, 1],
    (12899, 1): [12897, 1],
    (12907, 1): [12905, 1],
    (12911, 1): [12888, 1],
    (12917, 1): [12915, 1],
    (12919, 1): [12913, 1],
    (12923, 1): [12921, 1],
    (12941, 1): [12939, 1],
    (12953, 1): [12950, 1],
    (12959, 1): [12952, 1],
    (12967, 1): [12964, 1],
    (12973, 1): [12959, 1],
    (12979, 1): [12977, 1],
    (12983, 1): [12978, 1],
    (13001, 1): [12998, 1],
    (13003, 1): [12998, 1],
    (13007, 1): [13002, 1],
    (13009, 1): [13002, 1],
    (13033, 1): [13028, 1],
    (13037, 1): [13035, 1],
    (13043, 1): [13041, 1],
    (13049, 1): [13046, 1],
    (13063, 1): [13058, 1],
    (13093, 1): [13087, 1],
    (13099, 1): [13096, 1],
    (13103, 1): [13098, 1],
    (13109, 1): [13107, 1],
    (13121, 1): [13114, 1],
    (13127, 1): [13122, 1],
    (13147, 1): [13145, 1],
    (13151, 1): [13138, 1],
    (13159, 1): [13156, 1],
    (13163, 1): [13161, 1],
    (13171, 1): [13160, 1],
    (13177, 1): [13172, 1],
    (13183, 1): [13180, 1],
    (13187, 1): [13185, 1],
    (13217, 1): [13214, 1],
    (13219, 1): [13216, 1],
    (13229, 1): [13227, 1],
    (13241, 1): [13238, 1],
    (13249, 1): [13242, 1],
    (13259, 1): [13253, 1],
    (13267, 1): [13264, 1],
    (13291, 1): [13289, 1],
    (13297, 1): [13292, 1],
    (13309, 1): [13303, 1],
    (13313, 1): [13310, 1],
    (13327, 1): [13324, 1],
    (13331, 1): [13329, 1],
    (13337, 1): [13334, 1],
    (13339, 1): [13337, 1],
    (13367, 1): [13362, 1],
    (13381, 1): [13371, 1],
    (13397, 1): [13395, 1],
    (13399, 1): [13396, 1],
    (13411, 1): [13409, 1],
    (13417, 1): [13412, 1],
    (13421, 1): [13411, 1],
    (13441, 1): [13430, 1],
    (13451, 1): [13449, 1],
    (13457, 1): [13454, 1],
    (13463, 1): [13458, 1],
    (13469, 1): [13467, 1],
    (13477, 1): [13475, 1],
    (13487, 1): [13482, 1],
    (13499, 1): [13493, 1],
    (13513, 1): [13508, 1],
    (13523, 1): [13521, 1],
    (13537, 1): [13530, 1],
    (13553, 1): [13550, 1],
    (13567, 1): [13564, 1],
    (13577, 1): [13574, 1],
    (13591, 1): [13588, 1],
    (13597, 1): [13592, 1],
    (13613, 1): [13611, 1],
    (13619, 1): [13617, 1],
    (13627, 1): [13625, 1],
    (13633, 1): [13628, 1],
    (13649, 1): [13646, 1],
    (13669, 1): [13663, 1],
    (13679, 1): [13672, 1],
    (13681, 1): [13659, 1],
    (13687, 1): [13684, 1],
    (13691, 1): [13689, 1],
    (13693, 1): [13687, 1],
    (13697, 1): [13694, 1],
    (13709, 1): [13707, 1],
    (13711, 1): [13705, 1],
    (13721, 1): [13718, 1],
    (13723, 1): [13721, 1],
    (13729, 1): [13706, 1],
    (13751, 1): [13740, 1],
    (13757, 1): [13755, 1],
    (13759, 1): [13753, 1],
    (13763, 1): [13761, 1],
    (13781, 1): [13774, 1],
    (13789, 1): [13782, 1],
    (13799, 1): [13792, 1],
    (13807, 1): [13802, 1],
    (13829, 1): [13827, 1],
    (13831, 1): [13825, 1],
    (13841, 1): [13835, 1],
    (13859, 1): [13857, 1],
    (13873, 1): [13868, 1],
    (13877, 1): [13875, 1],
    (13879, 1): [13873, 1],
    (13883, 1): [13881, 1],
    (13901, 1): [13899, 1],
    (13903, 1): [13900, 1],
    (13907, 1): [13905, 1],
    (13913, 1): [13910, 1],
    (13921, 1): [13914, 1],
    (13931, 1): [13929, 1],
    (13933, 1): [13931, 1],
    (13963, 1): [13960, 1],
    (13967, 1): [13962, 1],
    (13997, 1): [13995, 1],
    (13999, 1): [13996, 1],
    (14009, 1): [14006, 1],
    (14011, 1): [14009, 1],
    (14029, 1): [14023, 1],
    (14033, 1): [14030, 1],
    (14051, 1): [14049, 1],
    (14057, 1): [14054, 1],
    (14071, 1): [14064, 1],
    (14081, 1): [14078, 1],
    (14083, 1): [14080, 1],
    (14087, 1): [14082, 1],
    (14107, 1): [14105, 1],
    (14143, 1): [14140, 1],
    (14149, 1): [14143, 1],
    (14153, 1): [14150, 1],
    (14159, 1): [14146, 1],
    (14173, 1): [14171, 1],
    (14177, 1): [14174, 1],
    (14197, 1): [14186, 1],
    (14207, 1): [14202, 1],
    (14221, 1): [14219, 1],
    (14243, 1): [14241, 1],
    (14249, 1): [14246, 1],
    (14251, 1): [14248, 1],
    (14281, 1): [14262, 1],
    (14293, 1): [14287, 1],
    (14303, 1): [14298, 1],
    (14321, 1): [14318, 1],
    (14323, 1): [14318, 1],
    (14327, 1): [14322, 1],
    (14341, 1): [14339, 1],
    (14347, 1): [14344, 1],
    (14369, 1): [14366, 1],
    (14387, 1): [14385, 1],
    (14389, 1): [14387, 1],
    (14401, 1): [14390, 1],
    (14407, 1): [14388, 1],
    (14411, 1): [14409, 1],
    (14419, 1): [14417, 1],
    (14423, 1): [14418, 1],
    (14431, 1): [14428, 1],
    (14437, 1): [14432, 1],
    (14447, 1): [14442, 1],
    (14449, 1): [14427, 1],
    (14461, 1): [14459, 1],
    (14479, 1): [14476, 1],
    (14489, 1): [14486, 1],
    (14503, 1): [14500, 1],
    (14519, 1): [14506, 1],
    (14533, 1): [14531, 1],
    (14537, 1): [14534, 1],
    (14543, 1): [14538, 1],
    (14549, 1): [14547, 1],
    (14551, 1): [14548, 1],
    (14557, 1): [14555, 1],
    (14561, 1): [14555, 1],
    (14563, 1): [14560, 1],
    (14591, 1): [14580, 1],
    (14593, 1): [14588, 1],
    (14621, 1): [14619, 1],
    (14627, 1): [14625, 1],
    (14629, 1): [14627, 1],
    (14633, 1): [14630, 1],
    (14639, 1): [14628, 1],
    (14653, 1): [14651, 1],
    (14657, 1): [14654, 1],
    (14669, 1): [14667, 1],
    (14683, 1): [14680, 1],
    (14699, 1): [14697, 1],
    (14713, 1): [14708, 1],
    (14717, 1): [14715, 1],
    (14723, 1): [14721, 1],
    (14731, 1): [14721, 1],
    (14737, 1): [14727, 1],
    (14741, 1): [14739, 1],
    (14747, 1): [14745, 1],
    (14753, 1): [14750, 1],
    (14759, 1): [14742, 1],
    (14767, 1): [14764, 1],
    (14771, 1): [14769, 1],
    (14779, 1): [14776, 1],
    (14783, 1): [14778, 1],
    (14797, 1): [14795, 1],
    (14813, 1): [14811, 1],
    (14821, 1): [14819, 1],
    (14827, 1): [14825, 1],
    (14831, 1): [14820, 1],
    (14843, 1): [14841, 1],
    (14851, 1): [14849, 1],
    (14867, 1): [14865, 1],
    (14869, 1): [14867, 1],
    (14879, 1): [14872, 1],
    (14887, 1): [14884, 1],
    (14891, 1): [14889, 1],
    (14897, 1): [14894, 1],
    (14923, 1): [14921, 1],
    (14929, 1): [14922, 1],
    (14939, 1): [14937, 1],
    (14947, 1): [14945, 1],
    (14951, 1): [14932, 1],
    (14957, 1): [14955, 1],
    (14969, 1): [14966, 1],
    (14983, 1): [14980, 1],
    (15013, 1): [15011, 1],
    (15017, 1): [15014, 1],
    (15031, 1): [15028, 1],
    (15053, 1): [15051, 1],
    (15061, 1): [15059, 1],
    (15073, 1): [15068, 1],
    (15077, 1): [15075, 1],
    (15083, 1): [15081, 1],
    (15091, 1): [15089, 1],
    (15101, 1): [15099, 1],
    (15107, 1): [15105, 1],
    (15121, 1): [15110, 1],
    (15131, 1): [15129, 1],
    (15137, 1): [15134, 1],
    (15139, 1): [15137, 1],
    (15149, 1): [15147, 1],
    (15161, 1): [15158, 1],
    (15173, 1): [15171, 1],
    (15187, 1): [15185, 1],
    (15193, 1): [15188, 1],
    (15199, 1): [15193, 1],
    (15217, 1): [15207, 1],
    (15227, 1): [15225, 1],
    (15233, 1): [15230, 1],
    (15241, 1): [15230, 1],
    (15259, 1): [15257, 1],
    (15263, 1): [15258, 1],
    (15269, 1): [15267, 1],
    (15271, 1): [15260, 1],
    (15277, 1): [15271, 1],
    (15287, 1): [15282, 1],
    (15289, 1): [15278, 1],
    (15299, 1): [15297, 1],
    (15307, 1): [15304, 1],
    (15313, 1): [15308, 1],
    (15319, 1): [15316, 1],
    (15329, 1): [15326, 1],
    (15331, 1): [15329, 1],
    (15349, 1): [15347, 1],
    (15359, 1): [15348, 1],
    (15361, 1): [15354, 1],
    (15373, 1): [15371, 1],
    (15377, 1): [15374, 1],
    (15383, 1): [15378, 1],
    (15391, 1): [15379, 1],
    (15401, 1): [15395, 1],
    (15413, 1): [15411, 1],
    (15427, 1): [15425, 1],
    (15439, 1): [15436, 1],
    (15443, 1): [15441, 1],
    (15451, 1): [15448, 1],
    (15461, 1): [15459, 1],
    (15467, 1): [15462, 1],
    (15473, 1): [15470, 1],
    (15493, 1): [15488, 1],
    (15497, 1): [15494, 1],
    (15511, 1): [15508, 1],
    (15527, 1): [15522, 1],
    (15541, 1): [15535, 1],
    (15551, 1): [15544, 1],
    (15559, 1): [15556, 1],
    (15569, 1): [15566, 1],
    (15581, 1): [15579, 1],
    (15583, 1): [15578, 1],
    (15601, 1): [15578, 1],
    (15607, 1): [15604, 1],
    (15619, 1): [15612, 1],
    (15629, 1): [15627, 1],
    (15641, 1): [15638, 1],
    (15643, 1): [15638, 1],
    (15647, 1): [15642, 1],
    (15649, 1): [15638, 1],
    (15661, 1): [15659, 1],
    (15667, 1): [15665, 1],
    (15671, 1): [15658, 1],
    (15679, 1): [15668, 1],
    (15683, 1): [15681, 1],
    (15727, 1): [15724, 1],
    (15731, 1): [15729, 1],
    (15733, 1): [15727, 1],
    (15737, 1): [15734, 1],
    (15739, 1): [15737, 1],
    (15749, 1): [15747, 1],
    (15761, 1): [15758, 1],
    (15767, 1): [15762, 1],
    (15773, 1): [15771, 1],
    (15787, 1): [15785, 1],
    (15791, 1): [15762, 1],
    (15797, 1): [15795, 1],
    (15803, 1): [15801, 1],
    (15809, 1): [15806, 1],
    (15817, 1): [15812, 1],
    (15823, 1): [15820, 1],
    (15859, 1): [15857, 1],
    (15877, 1): [15872, 1],
    (15881, 1): [15878, 1],
    (15887, 1): [15882, 1],
    (15889, 1): [15868, 1],
    (15901, 1): [15891, 1],
    (15907, 1): [15905, 1],
    (15913, 1): [15908, 1],
    (15919, 1): [15913, 1],
    (15923, 1): [15921, 1],
    (15937, 1): [15930, 1],
    (15959, 1): [15948, 1],
    (15971, 1): [15969, 1],
    (15973, 1): [15966, 1],
    (15991, 1): [15979, 1],
    (16001, 1): [15998, 1],
    (16007, 1): [16002, 1],
    (16033, 1): [16028, 1],
    (16057, 1): [16050, 1],
    (16061, 1): [16049, 1],
    (16063, 1): [16058, 1],
    (16067, 1): [16065, 1],
    (16069, 1): [16067, 1],
    (16073, 1): [16070, 1],
    (16087, 1): [16082, 1],
    (16091, 1): [16085, 1],
    (16097, 1): [16094, 1],
    (16103, 1): [16098, 1],
    (16111, 1): [16104, 1],
    (16127, 1): [16122, 1],
    (16139, 1): [16137, 1],
    (16141, 1): [16135, 1],
    (16183, 1): [16180, 1],
    (16187, 1): [16185, 1],
    (16189, 1): [16187, 1],
    (16193, 1): [16188, 1],
    (16217, 1): [16214, 1],
    (16223, 1): [16218, 1],
    (16229, 1): [16227, 1],
    (16231, 1): [16228, 1],
    (16249, 1): [16232, 1],
    (16253, 1): [16251, 1],
    (16267, 1): [16264, 1],
    (16273, 1): [16266, 1],
    (16301, 1): [16299, 1],
    (16319, 1): [16312, 1],
    (16333, 1): [16331, 1],
    (16339, 1): [16337, 1],
    (16349, 1): [16347, 1],
    (16361, 1): [16358, 1],
    (16363, 1): [16361, 1],
    (16369, 1): [16362, 1],
    (16381, 1): [16379, 1],
    (16411, 1): [16408, 1],
    (16417, 1): [16407, 1],
    (16421, 1): [16419, 1],
    (16427, 1): [16425, 1],
    (16433, 1): [16430, 1],
    (16447, 1): [16444, 1],
    (16451, 1): [16444, 1],
    (16453, 1): [16451, 1],
    (16477, 1): [16475, 1],
    (16481, 1): [16475, 1],
    (16487, 1): [16482, 1],
    (16493, 1): [16491, 1],
    (16519, 1): [16516, 1],
    (16529, 1): [16526, 1],
    (16547, 1): [16545, 1],
    (16553, 1): [16550, 1],
    (16561, 1): [16554, 1],
    (16567, 1): [16564, 1],
    (16573, 1): [16571, 1],
    (16603, 1): [16601, 1],
    (16607, 1): [16602, 1],
    (16619, 1): [16617, 1],
    (16631, 1): [16612, 1],
    (16633, 1): [16618, 1],
    (16649, 1): [16646, 1],
    (16651, 1): [16649, 1],
    (16657, 1): [16652, 1],
    (16661, 1): [16651, 1],
    (16673, 1): [16670, 1],
    (16691, 1): [16685, 1],
    (16693, 1): [16691, 1],
    (16699, 1): [16696, 1],
    (16703, 1): [16698, 1],
    (16729, 1): [16716, 1],
    (16741, 1): [16735, 1],
    (16747, 1): [16745, 1],
    (16759, 1): [16756, 1],
    (16763, 1): [16761, 1],
    (16787, 1): [16785, 1],
    (16811, 1): [16804, 1],
    (16823, 1): [16818, 1],
    (16829, 1): [16827, 1],
    (16831, 1): [16825, 1],
    (16843, 1): [16841, 1],
    (16871, 1): [16854, 1],
    (16879, 1): [16876, 1],
    (16883, 1): [16881, 1],
    (16889, 1): [16886, 1],
    (16901, 1): [16899, 1],
    (16903, 1): [16900, 1],
    (16921, 1): [16904, 1],
    (16927, 1): [16921, 1],
    (16931, 1): [16929, 1],
    (16937, 1): [16934, 1],
    (16943, 1): [16938, 1],
    (16963, 1): [16961, 1],
    (16979, 1): [16977, 1],
    (16981, 1): [16979, 1],
    (16987, 1): [16984, 1],
    (16993, 1): [16983, 1],
    (17011, 1): [17009, 1],
    (17021, 1): [17019, 1],
    (17027, 1): [17025, 1],
    (17029, 1): [17019, 1],
    (17033, 1): [17030, 1],
    (17041, 1): [17034, 1],
    (17047, 1): [17044, 1],
    (17053, 1): [17051, 1],
    (17077, 1): [17075, 1],
    (17093, 1): [17091, 1],
    (17099, 1): [17097, 1],
    (17107, 1): [17104, 1],
    (17117, 1): [17114, 1],
    (17123, 1): [17121, 1],
    (17137, 1): [17132, 1],
    (17159, 1): [17152, 1],
    (17167, 1): [17164, 1],
    (17183, 1): [17178, 1],
    (17189, 1): [17187, 1],
    (17191, 1): [17188, 1],
    (17203, 1): [17201, 1],
    (17207, 1): [17202, 1],
    (17209, 1): [17195, 1],
    (17231, 1): [17218, 1],
    (17239, 1): [17233, 1],
    (17257, 1): [17252, 1],
    (17291, 1): [17285, 1],
    (17293, 1): [17286, 1],
    (17299, 1): [17297, 1],
    (17317, 1): [17315, 1],
    (17321, 1): [17318, 1],
    (17327, 1): [17322, 1],
    (17333, 1): [17331, 1],
    (17341, 1): [17335, 1],
    (17351, 1): [17340, 1],
    (17359, 1): [17356, 1],
    (17377, 1): [17370, 1],
    (17383, 1): [17378, 1],
    (17387, 1): [17385, 1],
    (17389, 1): [17387, 1],
    (17393, 1): [17390, 1],
    (17401, 1): [17390, 1],
    (17417, 1): [17414, 1],
    (17419, 1): [17416, 1],
    (17431, 1): [17428, 1],
    (17443, 1): [17441, 1],
    (17449, 1): [17435, 1],
    (17467, 1): [17464, 1],
    (17471, 1): [17460, 1],
    (17477, 1): [17475, 1],
    (17483, 1): [17481, 1],
    (17489, 1): [17486, 1],
    (17491, 1): [17488, 1],
    (17497, 1): [17492, 1],
    (17509, 1): [17507, 1],
    (17519, 1): [17506, 1],
    (17539, 1): [17536, 1],
    (17551, 1): [17548, 1],
    (17569, 1): [17558, 1],
    (17573, 1): [17571, 1],
    (17579, 1): [17577, 1],
    (17581, 1): [17571, 1],
    (17597, 1): [17595, 1],
    (17599, 1): [17593, 1],
    (17609, 1): [17606, 1],
    (17623, 1): [17620, 1],
    (17627, 1): [17625, 1],
    (17657, 1): [17654, 1],
    (17659, 1): [17656, 1],
    (17669, 1): [17667, 1],
    (17681, 1): [17678, 1],
    (17683, 1): [17678, 1],
    (17707, 1): [17704, 1],
    (17713, 1): [17706, 1],
    (17729, 1): [17726, 1],
    (17737, 1): [17730, 1],
    (17747, 1): [17745, 1],
    (17749, 1): [17747, 1],
    (17761, 1): [17742, 1],
    (17783, 1): [17778, 1],
    (17789, 1): [17787, 1],
    (17791, 1): [17788, 1],
    (17807, 1): [17802, 1],
    (17827, 1): [17825, 1],
    (17837, 1): [17835, 1],
    (17839, 1): [17833, 1],
    (17851, 1): [17849, 1],
    (17863, 1): [17857, 1],
    (17881, 1): [17874, 1],
    (17891, 1): [17889, 1],
    (17903, 1): [17898, 1],
    (17909, 1): [17907, 1],
    (17911, 1): [17908, 1],
    (17921, 1): [17918, 1],
    (17923, 1): [17921, 1],
    (17929, 1): [17918, 1],
    (17939, 1): [17937, 1],
    (17957, 1): [17955, 1],
    (17959, 1): [17953, 1],
    (17971, 1): [17968, 1],
    (17977, 1): [17972, 1],
    (17981, 1): [17979, 1],
    (17987, 1): [17982, 1],
    (17989, 1): [17987, 1],
    (18013, 1): [18011, 1],
    (18041, 1): [18038, 1],
    (18043, 1): [18041, 1],
    (18047, 1): [18042, 1],
    (18049, 1): [18036, 1],
    (18059, 1): [18057, 1],
    (18061, 1): [18055, 1],
    (18077, 1): [18075, 1],
    (18089, 1): [18086, 1],
    (18097, 1): [18092, 1],
    (18119, 1): [18102, 1],
    (18121, 1): [18098, 1],
    (18127, 1): [18124, 1],
    (18131, 1): [18124, 1],
    (18133, 1): [18128, 1],
    (18143, 1): [18138, 1],
    (18149, 1): [18147, 1],
    (18169, 1): [18158, 1],
    (18181, 1): [18179, 1],
    (18191, 1): [18162, 1],
    (18199, 1): [18188, 1],
    (18211, 1): [18204, 1],
    (18217, 1): [18210, 1],
    (18223, 1): [18220, 1],
    (18229, 1): [18227, 1],
    (18233, 1): [18230, 1],
    (18251, 1): [18249, 1],
    (18253, 1): [18248, 1],
    (18257, 1): [18252, 1],
    (18269, 1): [18267, 1],
    (18287, 1): [18282, 1],
    (18289, 1): [18276, 1],
    (18301, 1): [18295, 1],
    (18307, 1): [18296, 1],
    (18311, 1): [18298, 1],
    (18313, 1): [18303, 1],
    (18329, 1): [18326, 1],
    (18341, 1): [18338, 1],
    (18353, 1): [18350, 1],
    (18367, 1): [18364, 1],
    (18371, 1): [18360, 1],
    (18379, 1): [18376, 1],
    (18397, 1): [18391, 1],
    (18401, 1): [18398, 1],
    (18413, 1): [18411, 1],
    (18427, 1): [18425, 1],
    (18433, 1): [18428, 1],
    (18439, 1): [18436, 1],
    (18443, 1): [18441, 1],
    (18451, 1): [18448, 1],
    (18457, 1): [18452, 1],
    (18461, 1): [18459, 1],
    (18481, 1): [18468, 1],
    (18493, 1): [18491, 1],
    (18503, 1): [18498, 1],
    (18517, 1): [18511, 1],
    (18521, 1): [18518, 1],
    (18523, 1): [18520, 1],
    (18539, 1): [18533, 1],
    (18541, 1): [18535, 1],
    (18553, 1): [18548, 1],
    (18583, 1): [18580, 1],
    (18587, 1): [18585, 1],
    (18593, 1): [18590, 1],
    (18617, 1): [18614, 1],
    (18637, 1): [18635, 1],
    (18661, 1): [18651, 1],
    (18671, 1): [18664, 1],
    (18679, 1): [18673, 1],
    (18691, 1): [18688, 1],
    (18701, 1): [18699, 1],
    (18713, 1): [18710, 1],
    (18719, 1): [18712, 1],
    (18731, 1): [18729, 1],
    (18743, 1): [18738, 1],
    (18749, 1): [18747, 1],
    (18757, 1): [18755, 1],
    (18773, 1): [18771, 1],
    (18787, 1): [18785, 1],
    (18793, 1): [18788, 1],
    (18797, 1): [18794, 1],
    (18803, 1): [18798, 1],
    (18839, 1): [18832, 1],
    (18859, 1): [18857, 1],
    (18869, 1): [18867, 1],
    (18899, 1): [18897, 1],
    (18911, 1): [18897, 1],
    (18913, 1): [18906, 1],
    (18917, 1): [18915, 1],
    (18919, 1): [18916, 1],
    (18947, 1): [18945, 1],
    (18959, 1): [18946, 1],
    (18973, 1): [18971, 1],
    (18979, 1): [18977, 1],
    (19001, 1): [18998, 1],
    (19009, 1): [18986, 1],
    (19013, 1): [19011, 1],
    (19031, 1): [19020, 1],
    (19037, 1): [19035, 1],
    (19051, 1): [19049, 1],
    (19069, 1): [19067, 1],
    (19073, 1): [19070, 1],
    (19079, 1): [19072, 1],
    (19081, 1): [19064, 1],
    (19087, 1): [19068, 1],
    (19121, 1): [19115, 1],
    (19139, 1): [19137, 1],
    (19141, 1): [19139, 1],
    (19157, 1): [19155, 1],
    (19163, 1): [19161, 1],
    (19181, 1): [19179, 1],
    (19183, 1): [19180, 1],
    (19207, 1): [19202, 1],
    (19211, 1): [19205, 1],
    (19213, 1): [19208, 1],
    (19219, 1): [19217, 1],
    (19231, 1): [19225, 1],
    (19237, 1): [19235, 1],
    (19249, 1): [19242, 1],
    (19259, 1): [19257, 1],
    (19267, 1): [19264, 1],
    (19273, 1): [19268, 1],
    (19289, 1): [19286, 1],
    (19301, 1): [19299, 1],
    (19309, 1): [19303, 1],
    (19319, 1): [19308, 1],
    (19333, 1): [19331, 1],
    (19373, 1): [19371, 1],
    (19379, 1): [19377, 1],
    (19381, 1): [19374, 1],
    (19387, 1): [19385, 1],
    (19391, 1): [19380, 1],
    (19403, 1): [19401, 1],
    (19417, 1): [19412, 1],
    (19421, 1): [19418, 1],
    (19423, 1): [19420, 1],
    (19427, 1): [19425, 1],
    (19429, 1): [19423, 1],
    (19433, 1): [19430, 1],
    (19441, 1): [19428, 1],
    (19447, 1): [19444, 1],
    (19457, 1): [19454, 1],
    (19463, 1): [19458, 1],
    (19469, 1): [19467, 1],
    (19471, 1): [19460, 1],
    (19477, 1): [19471, 1],
    (19483, 1): [19481, 1],
    (19489, 1): [19470, 1],
    (19501, 1): [19499, 1],
    (19507, 1): [19505, 1],
    (19531, 1): [19518, 1],
    (19541, 1): [19539, 1],
    (19543, 1): [19540, 1],
    (19553, 1): [19550, 1],
    (19559, 1): [19546, 1],
    (19571, 1): [19569, 1],
    (19577, 1): [19574, 1],
    (19583, 1): [19578, 1],
    (19597, 1): [19595, 1],
    (19603, 1): [19601, 1],
    (19609, 1): [19596, 1],
    (19661, 1): [19659, 1],
    (19681, 1): [19670, 1],
    (19687, 1): [19682, 1],
    (19697, 1): [19694, 1],
    (19699, 1): [19692, 1],
    (19709, 1): [19707, 1],
    (19717, 1): [19715, 1],
    (19727, 1): [19722, 1],
    (19739, 1): [19737, 1],
    (19751, 1): [19744, 1],
    (19753, 1): [19748, 1],
    (19759, 1): [19756, 1],
    (19763, 1): [19761, 1],
    (19777, 1): [19766, 1],
    (19793, 1): [19790, 1],
    (19801, 1): [19788, 1],
    (19813, 1): [19811, 1],
    (19819, 1): [19816, 1],
    (19841, 1): [19838, 1],
    (19843, 1): [19824, 1],
    (19853, 1): [19851, 1],
    (19861, 1): [19850, 1],
    (19867, 1): [19865, 1],
    (19889, 1): [19886, 1],
    (19891, 1): [19889, 1],
    (19913, 1): [19910, 1],
    (19919, 1): [19912, 1],
    (19927, 1): [19921, 1],
    (19937, 1): [19934, 1],
    (19949, 1): [19947, 1],
    (19961, 1): [19955, 1],
    (19963, 1): [19961, 1],
    (19973, 1): [19971, 1],
    (19979, 1): [19977, 1],
    (19991, 1): [19980, 1],
    (19993, 1): [19983, 1],
    (19997, 1): [19995, 1],
    (20011, 1): [19999, 1],
    (20021, 1): [20018, 1],
    (20023, 1): [20020, 1],
    (20029, 1): [20027, 1],
    (20047, 1): [20044, 1],
    (20051, 1): [20049, 1],
    (20063, 1): [20058, 1],
    (20071, 1): [20068, 1],
    (20089, 1): [20082, 1],
    (20101, 1): [20095, 1],
    (20107, 1): [20105, 1],
    (20113, 1): [20103, 1],
    (20117, 1): [20115, 1],
    (20123, 1): [20121, 1],
    (20129, 1): [20126, 1],
    (20143, 1): [20138, 1],
    (20147, 1): [20141, 1],
    (20149, 1): [20147, 1],
    (20161, 1): [20148, 1],
    (20173, 1): [20171, 1],
    (20177, 1): [20174, 1],
    (20183, 1): [20178, 1],
    (20201, 1): [20195, 1],
    (20219, 1): [20217, 1],
    (20231, 1): [20202, 1],
    (20233, 1): [20228, 1],
    (20249, 1): [20246, 1],
    (20261, 1): [20259, 1],
    (20269, 1): [20267, 1],
    (20287, 1): [20282, 1],
    (20297, 1): [20294, 1],
    (20323, 1): [20321, 1],
    (20327, 1): [20322, 1],
    (20333, 1): [20330, 1],
    (20341, 1): [20339, 1],
    (20347, 1): [20344, 1],
    (20353, 1): [20348, 1],
    (20357, 1): [20355, 1],
    (20359, 1): [20348, 1],
    (20369, 1): [20366, 1],
    (20389, 1): [20383, 1],
    (20393, 1): [20390, 1],
    (20399, 1): [20392, 1],
    (20407, 1): [20402, 1],
    (20411, 1): [20405, 1],
    (20431, 1): [20428, 1],
    (20441, 1): [20438, 1],
    (20443, 1): [20441, 1],
    (20477, 1): [20475, 1],
    (20479, 1): [20476, 1],
    (20483, 1): [20478, 1],
    (20507, 1): [20505, 1],
    (20509, 1): [20507, 1],
    (20521, 1): [20510, 1],
    (20533, 1): [20531, 1],
    (20543, 1): [20538, 1],
    (20549, 1): [20547, 1],
    (20551, 1): [20548, 1],
    (20563, 1): [20560, 1],
    (20593, 1): [20588, 1],
    (20599, 1): [20596, 1],
    (20611, 1): [20609, 1],
    (20627, 1): [20625, 1],
    (20639, 1): [20628, 1],
    (20641, 1): [20634, 1],
    (20663, 1): [20658, 1],
    (20681, 1): [20678, 1],
    (20693, 1): [20691, 1],
    (20707, 1): [20702, 1],
    (20717, 1): [20715, 1],
    (20719, 1): [20716, 1],
    (20731, 1): [20729, 1],
    (20743, 1): [20738, 1],
    (20747, 1): [20742, 1],
    (20749, 1): [20747, 1],
    (20753, 1): [20750, 1],
    (20759, 1): [20752, 1],
    (20771, 1): [20769, 1],
    (20773, 1): [20771, 1],
    (20789, 1): [20787, 1],
    (20807, 1): [20802, 1],
    (20809, 1): [20802, 1],
    (20849, 1): [20846, 1],
    (20857, 1): [20847, 1],
    (20873, 1): [20870, 1],
    (20879, 1): [20868, 1],
    (20887, 1): [20884, 1],
    (20897, 1): [20894, 1],
    (20899, 1): [20897, 1],
    (20903, 1): [20898, 1],
    (20921, 1): [20918, 1],
    (20929, 1): [20922, 1],
    (20939, 1): [20937, 1],
    (20947, 1): [20944, 1],
    (20959, 1): [20952, 1],
    (20963, 1): [20961, 1],
    (20981, 1): [20979, 1],
    (20983, 1): [20980, 1],
    (21001, 1): [20990, 1],
    (21011, 1): [21009, 1],
    (21013, 1): [21011, 1],
    (21017, 1): [21014, 1],
    (21019, 1): [21017, 1],
    (21023, 1): [21018, 1],
    (21031, 1): [21019, 1],
    (21059, 1): [21057, 1],
    (21061, 1): [21054, 1],
    (21067, 1): [21065, 1],
    (21089, 1): [21086, 1],
    (21101, 1): [21099, 1],
    (21107, 1): [21105, 1],
    (21121, 1): [21102, 1],
    (21139, 1): [21137, 1],
    (21143, 1): [21133, 1],
    (21149, 1): [21146, 1],
    (21157, 1): [21155, 1],
    (21163, 1): [21161, 1],
    (21169, 1): [21156, 1],
    (21179, 1): [21177, 1],
    (21187, 1): [21185, 1],
    (21191, 1): [21184, 1],
    (21193, 1): [21182, 1],
    (21211, 1): [21209, 1],
    (21221, 1): [21219, 1],
    (21227, 1): [21225, 1],
    (21247, 1): [21244, 1],
    (21269, 1): [21267, 1],
    (21277, 1): [21271, 1],
    (21283, 1): [21272, 1],
    (21313, 1): [21308, 1],
    (21317, 1): [21315, 1],
    (21319, 1): [21305, 1],
    (21323, 1): [21318, 1],
    (21341, 1): [21339, 1],
    (21347, 1): [21345, 1],
    (21377, 1): [21374, 1],
    (21379, 1): [21377, 1],
    (21383, 1): [21378, 1],
    (21391, 1): [21385, 1],
    (21397, 1): [21395, 1],
    (21401, 1): [21398, 1],
    (21407, 1): [21402, 1],
    (21419, 1): [21417, 1],
    (21433, 1): [21428, 1],
    (21467, 1): [21465, 1],
    (21481, 1): [21468, 1],
    (21487, 1): [21484, 1],
    (21491, 1): [21489, 1],
    (21493, 1): [21491, 1],
    (21499, 1): [21496, 1],
    (21503, 1): [21498, 1],
    (21517, 1): [21512, 1],
    (21521, 1): [21518, 1],
    (21523, 1): [21521, 1],
    (21529, 1): [21518, 1],
    (21557, 1): [21555, 1],
    (21559, 1): [21544, 1],
    (21563, 1): [21561, 1],
    (21569, 1): [21566, 1],
    (21577, 1): [21572, 1],
    (21587, 1): [21585, 1],
    (21589, 1): [21587, 1],
    (21599, 1): [21592, 1],
    (21601, 1): [21594, 1],
    (21611, 1): [21609, 1],
    (21613, 1): [21611, 1],
    (21617, 1): [21614, 1],
    (21647, 1): [21642, 1],
    (21649, 1): [21635, 1],
    (21661, 1): [21659, 1],
    (21673, 1): [21663, 1],
    (21683, 1): [21681, 1],
    (21701, 1): [21699, 1],
    (21713, 1): [21710, 1],
    (21727, 1): [21724, 1],
    (21737, 1): [21731, 1],
    (21739, 1): [21737, 1],
    (21751, 1): [21748, 1],
    (21757, 1): [21752, 1],
    (21767, 1): [21762, 1],
    (21773, 1): [21771, 1],
    (21787, 1): [21764, 1],
    (21799, 1): [21792, 1],
    (21803, 1): [21801, 1],
    (21817, 1): [21810, 1],
    (21821, 1): [21819, 1],
    (21839, 1): [21828, 1],
    (21841, 1): [21830, 1],
    (21851, 1): [21845, 1],
    (21859, 1): [21857, 1],
    (21863, 1): [21858, 1],
    (21871, 1): [21865, 1],
    (21881, 1): [21878, 1],
    (21893, 1): [21891, 1],
    (21911, 1): [21898, 1],
    (21929, 1): [21926, 1],
    (21937, 1): [21930, 1],
    (21943, 1): [21938, 1],
    (21961, 1): [21944, 1],
    (21977, 1): [21974, 1],
    (21991, 1): [21988, 1],
    (21997, 1): [21990, 1],
    (22003, 1): [22001, 1],
    (22013, 1): [22011, 1],
    (22027, 1): [22024, 1],
    (22031, 1): [22024, 1],
    (22037, 1): [22035, 1],
    (22039, 1): [22033, 1],
    (22051, 1): [22048, 1],
    (22063, 1): [22058, 1],
    (22067, 1): [22065, 1],
    (22073, 1): [22070, 1],
    (22079, 1): [22072, 1],
    (22091, 1): [22089, 1],
    (22093, 1): [22087, 1],
    (22109, 1): [22107, 1],
    (22111, 1): [22105, 1],
    (22123, 1): [22121, 1],
    (22129, 1): [22110, 1],
    (22133, 1): [22131, 1],
    (22147, 1): [22142, 1],
    (22153, 1): [22148, 1],
    (22157, 1): [22155, 1],
    (22159, 1): [22153, 1],
    (22171, 1): [22169, 1],
    (22189, 1): [22187, 1],
    (22193, 1): [22190, 1],
    (22229, 1): [22227, 1],
    (22247, 1): [22242, 1],
    (22259, 1): [22257, 1],
    (22271, 1): [22264, 1],
    (22273, 1): [22268, 1],
    (22277, 1): [22275, 1],
    (22279, 1): [22276, 1],
    (22283, 1): [22281, 1],
    (22291, 1): [22288, 1],
    (22303, 1): [22297, 1],
    (22307, 1): [22305, 1],
    (22343, 1): [22338, 1],
    (22349, 1): [22347, 1],
    (22367, 1): [22362, 1],
    (22369, 1): [22358, 1],
    (22381, 1): [22371, 1],
    (22391, 1): [22378, 1],
    (22397, 1): [22395, 1],
    (22409, 1): [22406, 1],
    (22433, 1): [22430, 1],
    (22441, 1): [22427, 1],
    (22447, 1): [22444, 1],
    (22453, 1): [22448, 1],
    (22469, 1): [22467, 1],
    (22481, 1): [22478, 1],
    (22483, 1): [22481, 1],
    (22501, 1): [22499, 1],
    (22511, 1): [22500, 1],
    (22531, 1): [22529, 1],
    (22541, 1): [22538, 1],
    (22543, 1): [22540, 1],
    (22549, 1): [22547, 1],
    (22567, 1): [22564, 1],
    (22571, 1): [22565, 1],
    (22573, 1): [22567, 1],
    (22613, 1): [22611, 1],
    (22619, 1): [22617, 1],
    (22621, 1): [22619, 1],
    (22637, 1): [22635, 1],
    (22639, 1): [22633, 1],
    (22643, 1): [22641, 1],
    (22651, 1): [22648, 1],
    (22669, 1): [22667, 1],
    (22679, 1): [22666, 1],
    (22691, 1): [22689, 1],
    (22697, 1): [22694, 1],
    (22699, 1): [22687, 1],
    (22709, 1): [22707, 1],
    (22717, 1): [22715, 1],
    (22721, 1): [22718, 1],
    (22727, 1): [22722, 1],
    (22739, 1): [22737, 1],
    (22741, 1): [22734, 1],
    (22751, 1): [22730, 1],
    (22769, 1): [22766, 1],
    (22777, 1): [22770, 1],
    (22783, 1): [22780, 1],
    (22787, 1): [22785, 1],
    (22807, 1): [22804, 1],
    (22811, 1): [22805, 1],
    (22817, 1): [22814, 1],
    (22853, 1): [22851, 1],
    (22859, 1): [22857, 1],
    (22861, 1): [22859, 1],
    (22871, 1): [22864, 1],
    (22877, 1): [22875, 1],
    (22901, 1): [22899, 1],
    (22907, 1): [22902, 1],
    (22921, 1): [22914, 1],
    (22937, 1): [22934, 1],
    (22943, 1): [22938, 1],
    (22961, 1): [22955, 1],
    (22963, 1): [22960, 1],
    (22973, 1): [22971, 1],
    (22993, 1): [22988, 1],
    (23003, 1): [23001, 1],
    (23011, 1): [23004, 1],
    (23017, 1): [23012, 1],
    (23021, 1): [23019, 1],
    (23027, 1): [23025, 1],
    (23029, 1): [23027, 1],
    (23039, 1): [23032, 1],
    (23041, 1): [23030, 1],
    (23053, 1): [23051, 1],
    (23057, 1): [23052, 1],
    (23059, 1): [23056, 1],
    (23063, 1): [23058, 1],
    (23071, 1): [23068, 1],
    (23081, 1): [23078, 1],
    (23087, 1): [23082, 1],
    (23099, 1): [23097, 1],
    (23117, 1): [23115, 1],
    (23131, 1): [23128, 1],
    (23143, 1): [23138, 1],
    (23159, 1): [23148, 1],
    (23167, 1): [23164, 1],
    (23173, 1): [23168, 1],
    (23189, 1): [23187, 1],
    (23197, 1): [23195, 1],
    (23201, 1): [23198, 1],
    (23203, 1): [23200, 1],
    (23209, 1): [23178, 1],
    (23227, 1): [23224, 1],
    (23251, 1): [23249, 1],
    (23269, 1): [23263, 1],
    (23279, 1): [23272, 1],
    (23291, 1): [23285, 1],
    (23293, 1): [23288, 1],
    (23297, 1): [23294, 1],
    (23311, 1): [23308, 1],
    (23321, 1): [23318, 1],
    (23327, 1): [23322, 1],
    (23333, 1): [23331, 1],
    (23339, 1): [23337, 1],
    (23357, 1): [23355, 1],
    (23369, 1): [23366, 1],
    (23371, 1): [23369, 1],
    (23399, 1): [23382, 1],
    (23417, 1): [23414, 1],
    (23431, 1): [23428, 1],
    (23447, 1): [23442, 1],
    (23459, 1): [23457, 1],
    (23473, 1): [23468, 1],
    (23497, 1): [23492, 1],
    (23509, 1): [23507, 1],
    (23531, 1): [23529, 1],
    (23537, 1): [23534, 1],
    (23539, 1): [23537, 1],
    (23549, 1): [23547, 1],
    (23557, 1): [23552, 1],
    (23561, 1): [23558, 1],
    (23563, 1): [23561, 1],
    (23567, 1): [23562, 1],
    (23581, 1): [23575, 1],
    (23593, 1): [23588, 1],
    (23599, 1): [23596, 1],
    (23603, 1): [23601, 1],
    (23609, 1): [23603, 1],
    (23623, 1): [23617, 1],
    (23627, 1): [23625, 1],
    (23629, 1): [23627, 1],
    (23633, 1): [23628, 1],
    (23663, 1): [23658, 1],
    (23669, 1): [23667, 1],
    (23671, 1): [23668, 1],
    (23677, 1): [23672, 1],
    (23687, 1): [23682, 1],
    (23689, 1): [23678, 1],
    (23719, 1): [23713, 1],
    (23741, 1): [23739, 1],
    (23743, 1): [23740, 1],
    (23747, 1): [23745, 1],
    (23753, 1): [23750, 1],
    (23761, 1): [23754, 1],
    (23767, 1): [23764, 1],
    (23773, 1): [23768, 1],
    (23789, 1): [23787, 1],
    (23801, 1): [23798, 1],
    (23813, 1): [23811, 1],
    (23819, 1): [23817, 1],
    (23827, 1): [23825, 1],
    (23831, 1): [23820, 1],
    (23833, 1): [23828, 1],
    (23857, 1): [23852, 1],
    (23869, 1): [23867, 1],
    (23873, 1): [23870, 1],
    (23879, 1): [23872, 1],
    (23887, 1): [23884, 1],
    (23893, 1): [23888, 1],
    (23899, 1): [23897, 1],
    (23909, 1): [23907, 1],
    (23911, 1): [23905, 1],
    (23917, 1): [23915, 1],
    (23929, 1): [23922, 1],
    (23957, 1): [23955, 1],
    (23971, 1): [23961, 1],
    (23977, 1): [23972, 1],
    (23981, 1): [23978, 1],
    (23993, 1): [23990, 1],
    (24001, 1): [23987, 1],
    (24007, 1): [23990, 1],
    (24019, 1): [24017, 1],
    (24023, 1): [24018, 1],
    (24029, 1): [24027, 1],
    (24043, 1): [24041, 1],
    (24049, 1): [24030, 1],
    (24061, 1): [24051, 1],
    (24071, 1): [24060, 1],
    (24077, 1): [24075, 1],
    (24083, 1): [24081, 1],
    (24091, 1): [24084, 1],
    (24097, 1): [24092, 1],
    (24103, 1): [24098, 1],
    (24107, 1): [24105, 1],
    (24109, 1): [24107, 1],
    (24113, 1): [24110, 1],
    (24121, 1): [24108, 1],
    (24133, 1): [24127, 1],
    (24137, 1): [24134, 1],
    (24151, 1): [24145, 1],
    (24169, 1): [24158, 1],
    (24179, 1): [24177, 1],
    (24181, 1): [24164, 1],
    (24197, 1): [24195, 1],
    (24203, 1): [24201, 1],
    (24223, 1): [24220, 1],
    (24229, 1): [24227, 1],
    (24239, 1): [24226, 1],
    (24247, 1): [24244, 1],
    (24251, 1): [24245, 1],
    (24281, 1): [24278, 1],
    (24317, 1): [24315, 1],
    (24329, 1): [24326, 1],
    (24337, 1): [24332, 1],
    (24359, 1): [24348, 1],
    (24371, 1): [24369, 1],
    (24373, 1): [24366, 1],
    (24379, 1): [24377, 1],
    (24391, 1): [24388, 1],
    (24407, 1): [24402, 1],
    (24413, 1): [24411, 1],
    (24419, 1): [24417, 1],
    (24421, 1): [24414, 1],
    (24439, 1): [24433, 1],
    (24443, 1): [24441, 1],
    (24469, 1): [24455, 1],
    (24473, 1): [24470, 1],
    (24481, 1): [24470, 1],
    (24499, 1): [24497, 1],
    (24509, 1): [24507, 1],
    (24517, 1): [24512, 1],
    (24527, 1): [24522, 1],
    (24533, 1): [24531, 1],
    (24547, 1): [24545, 1],
    (24551, 1): [24544, 1],
    (24571, 1): [24564, 1],
    (24593, 1): [24590, 1],
    (24611, 1): [24598, 1],
    (24623, 1): [24618, 1],
    (24631, 1): [24628, 1],
    (24659, 1): [24657, 1],
    (24671, 1): [24660, 1],
    (24677, 1): [24675, 1],
    (24683, 1): [24681, 1],
    (24691, 1): [24689, 1],
    (24697, 1): [24692, 1],
    (24709, 1): [24707, 1],
    (24733, 1): [24731, 1],
    (24749, 1): [24747, 1],
    (24763, 1): [24761, 1],
    (24767, 1): [24762, 1],
    (24781, 1): [24779, 1],
    (24793, 1): [24788, 1],
    (24799, 1): [24793, 1],
    (24809, 1): [24803, 1],
    (24821, 1): [24819, 1],
    (24841, 1): [24827, 1],
    (24847, 1): [24844, 1],
    (24851, 1): [24849, 1],
    (24859, 1): [24857, 1],
    (24877, 1): [24872, 1],
    (24889, 1): [24878, 1],
    (24907, 1): [24905, 1],
    (24917, 1): [24915, 1],
    (24919, 1): [24916, 1],
    (24923, 1): [24921, 1],
    (24943, 1): [24938, 1],
    (24953, 1): [24950, 1],
    (24967, 1): [24964, 1],
    (24971, 1): [24969, 1],
    (24977, 1): [24974, 1],
    (24979, 1): [24977, 1],
    (24989, 1): [24987, 1],
    (25013, 1): [25011, 1],
    (25031, 1): [25018, 1],
    (25033, 1): [25028, 1],
    (25037, 1): [25035, 1],
    (25057, 1): [25052, 1],
    (25073, 1): [25070, 1],
    (25087, 1): [25084, 1],
    (25097, 1): [25094, 1],
    (25111, 1): [25108, 1],
    (25117, 1): [25112, 1],
    (25121, 1): [25118, 1],
    (25127, 1): [25122, 1],
    (25147, 1): [25145, 1],
    (25153, 1): [25143, 1],
    (25163, 1): [25161, 1],
    (25169, 1): [25166, 1],
    (25171, 1): [25168, 1],
    (25183, 1): [25178, 1],
    (25189, 1): [25187, 1],
    (25219, 1): [25217, 1],
    (25229, 1): [25227, 1],
    (25237, 1): [25235, 1],
    (25243, 1): [25241, 1],
    (25247, 1): [25242, 1],
    (25253, 1): [25251, 1],
    (25261, 1): [25254, 1],
    (25301, 1): [25298, 1],
    (25303, 1): [25300, 1],
    (25307, 1): [25305, 1],
    (25309, 1): [25296, 1],
    (25321, 1): [25302, 1],
    (25339, 1): [25336, 1],
    (25343, 1): [25338, 1],
    (25349, 1): [25347, 1],
    (25357, 1): [25355, 1],
    (25367, 1): [25362, 1],
    (25373, 1): [25371, 1],
    (25391, 1): [25384, 1],
    (25409, 1): [25406, 1],
    (25411, 1): [25404, 1],
    (25423, 1): [25420, 1],
    (25439, 1): [25432, 1],
    (25447, 1): [25444, 1],
    (25453, 1): [25451, 1],
    (25457, 1): [25454, 1],
    (25463, 1): [25458, 1],
    (25469, 1): [25467, 1],
    (25471, 1): [25465, 1],
    (25523, 1): [25521, 1],
    (25537, 1): [25527, 1],
    (25541, 1): [25539, 1],
    (25561, 1): [25550, 1],
    (25577, 1): [25574, 1],
    (25579, 1): [25577, 1],
    (25583, 1): [25578, 1],
    (25589, 1): [25587, 1],
    (25601, 1): [25598, 1],
    (25603, 1): [25601, 1],
    (25609, 1): [25602, 1],
    (25621, 1): [25611, 1],
    (25633, 1): [25628, 1],
    (25639, 1): [25636, 1],
    (25643, 1): [25641, 1],
    (25657, 1): [25652, 1],
    (25667, 1): [25665, 1],
    (25673, 1): [25670, 1],
    (25679, 1): [25668, 1],
    (25693, 1): [25691, 1],
    (25703, 1): [25698, 1],
    (25717, 1): [25715, 1],
    (25733, 1): [25731, 1],
    (25741, 1): [25735, 1],
    (25747, 1): [25745, 1],
    (25759, 1): [25756, 1],
    (25763, 1): [25758, 1],
    (25771, 1): [25769, 1],
    (25793, 1): [25790, 1],
    (25799, 1): [25792, 1],
    (25801, 1): [25794, 1],
    (25819, 1): [25816, 1],
    (25841, 1): [25838, 1],
    (25847, 1): [25842, 1],
    (25849, 1): [25842, 1],
    (25867, 1): [25865, 1],
    (25873, 1): [25863, 1],
    (25889, 1): [25886, 1],
    (25903, 1): [25898, 1],
    (25913, 1): [25910, 1],
    (25919, 1): [25908, 1],
    (25931, 1): [25929, 1],
    (25933, 1): [25931, 1],
    (25939, 1): [25936, 1],
    (25943, 1): [25938, 1],
    (25951, 1): [25948, 1],
    (25969, 1): [25962, 1],
    (25981, 1): [25970, 1],
    (25997, 1): [25995, 1],
    (25999, 1): [25992, 1],
    (26003, 1): [26001, 1],
    (26017, 1): [26012, 1],
    (26021, 1): [26019, 1],
    (26029, 1): [26023, 1],
    (26041, 1): [26028, 1],
    (26053, 1): [26051, 1],
    (26083, 1): [26076, 1],
    (26099, 1): [26097, 1],
    (26107, 1): [26105, 1],
    (26111, 1): [26104, 1],
    (26113, 1): [26106, 1],
    (26119, 1): [26116, 1],
    (26141, 1): [26139, 1],
    (26153, 1): [26150, 1],
    (26161, 1): [26148, 1],
    (26171, 1): [26169, 1],
    (26177, 1): [26174, 1],
    (26183, 1): [26178, 1],
    (26189, 1): [26187, 1],
    (26203, 1): [26200, 1],
    (26209, 1): [26198, 1],
    (26227, 1): [26224, 1],
    (26237, 1): [26235, 1],
    (26249, 1): [26246, 1],
    (26251, 1): [26249, 1],
    (26261, 1): [26259, 1],
    (26263, 1): [26260, 1],
    (26267, 1): [26265, 1],
    (26293, 1): [26287, 1],
    (26297, 1): [26294, 1],
    (26309, 1): [26307, 1],
    (26317, 1): [26311, 1],
    (26321, 1): [26318, 1],
    (26339, 1): [26337, 1],
    (26347, 1): [26344, 1],
    (26357, 1): [26355, 1],
    (26371, 1): [26368, 1],
    (26387, 1): [26385, 1],
    (26393, 1): [26390, 1],
    (26399, 1): [26392, 1],
    (26407, 1): [26402, 1],
    (26417, 1): [26414, 1],
    (26423, 1): [26418, 1],
    (26431, 1): [26428, 1],
    (26437, 1): [26432, 1],
    (26449, 1): [26442, 1],
    (26459, 1): [26457, 1],
    (26479, 1): [26476, 1],
    (26489, 1): [26486, 1],
    (26497, 1): [26492, 1],
    (26501, 1): [26499, 1],
    (26513, 1): [26510, 1],
    (26539, 1): [26537, 1],
    (26557, 1): [26555, 1],
    (26561, 1): [26558, 1],
    (26573, 1): [26571, 1],
    (26591, 1): [26569, 1],
    (26597, 1): [26595, 1],
    (26627, 1): [26625, 1],
    (26633, 1): [26630, 1],
    (26641, 1): [26634, 1],
    (26647, 1): [26644, 1],
    (26669, 1): [26667, 1],
    (26681, 1): [26675, 1],
    (26683, 1): [26681, 1],
    (26687, 1): [26682, 1],
    (26693, 1): [26691, 1],
    (26699, 1): [26697, 1],
    (26701, 1): [26679, 1],
    (26711, 1): [26700, 1],
    (26713, 1): [26703, 1],
    (26717, 1): [26715, 1],
    (26723, 1): [26721, 1],
    (26729, 1): [26726, 1],
    (26731, 1): [26728, 1],
    (26737, 1): [26727, 1],
    (26759, 1): [26746, 1],
    (26777, 1): [26774, 1],
    (26783, 1): [26778, 1],
    (26801, 1): [26798, 1],
    (26813, 1): [26811, 1],
    (26821, 1): [26819, 1],
    (26833, 1): [26828, 1],
    (26839, 1): [26836, 1],
    (26849, 1): [26846, 1],
    (26861, 1): [26859, 1],
    (26863, 1): [26858, 1],
    (26879, 1): [26866, 1],
    (26881, 1): [26870, 1],
    (26891, 1): [26885, 1],
    (26893, 1): [26888, 1],
    (26903, 1): [26898, 1],
    (26921, 1): [26908, 1],
    (26927, 1): [26922, 1],
    (26947, 1): [26945, 1],
    (26951, 1): [26944, 1],
    (26953, 1): [26946, 1],
    (26959, 1): [26953, 1],
    (26981, 1): [26978, 1],
    (26987, 1): [26985, 1],
    (26993, 1): [26990, 1],
    (27011, 1): [27009, 1],
    (27017, 1): [27012, 1],
    (27031, 1): [27025, 1],
    (27043, 1): [27041, 1],
    (27059, 1): [27057, 1],
    (27061, 1): [27059, 1],
    (27067, 1): [27065, 1],
    (27073, 1): [27068, 1],
    (27077, 1): [27075, 1],
    (27091, 1): [27089, 1],
    (27103, 1): [27100, 1],
    (27107, 1): [27105, 1],
    (27109, 1): [27102, 1],
    (27127, 1): [27124, 1],
    (27143, 1): [27138, 1],
    (27179, 1): [27177, 1],
    (27191, 1): [27165, 1],
    (27197, 1): [27195, 1],
    (27211, 1): [27201, 1],
    (27239, 1): [27232, 1],
    (27241, 1): [27224, 1],
    (27253, 1): [27251, 1],
    (27259, 1): [27257, 1],
    (27271, 1): [27265, 1],
    (27277, 1): [27271, 1],
    (27281, 1): [27275, 1],
    (27283, 1): [27278, 1],
    (27299, 1): [27297, 1],
    (27329, 1): [27326, 1],
    (27337, 1): [27332, 1],
    (27361, 1): [27354, 1],
    (27367, 1): [27364, 1],
    (27397, 1): [27395, 1],
    (27407, 1): [27402, 1],
    (27409, 1): [27396, 1],
    (27427, 1): [27422, 1],
    (27431, 1): [27414, 1],
    (27437, 1): [27435, 1],
    (27449, 1): [27446, 1],
    (27457, 1): [27450, 1],
    (27479, 1): [27472, 1],
    (27481, 1): [27474, 1],
    (27487, 1): [27484, 1],
    (27509, 1): [27507, 1],
    (27527, 1): [27522, 1],
    (27529, 1): [27522, 1],
    (27539, 1): [27537, 1],
    (27541, 1): [27522, 1],
    (27551, 1): [27534, 1],
    (27581, 1): [27579, 1],
    (27583, 1): [27580, 1],
    (27611, 1): [27609, 1],
    (27617, 1): [27614, 1],
    (27631, 1): [27625, 1],
    (27647, 1): [27642, 1],
    (27653, 1): [27651, 1],
    (27673, 1): [27662, 1],
    (27689, 1): [27686, 1],
    (27691, 1): [27688, 1],
    (27697, 1): [27692, 1],
    (27701, 1): [27699, 1],
    (27733, 1): [27731, 1],
    (27737, 1): [27734, 1],
    (27739, 1): [27736, 1],
    (27743, 1): [27738, 1],
    (27749, 1): [27746, 1],
    (27751, 1): [27748, 1],
    (27763, 1): [27760, 1],
    (27767, 1): [27762, 1],
    (27773, 1): [27771, 1],
    (27779, 1): [27777, 1],
    (27791, 1): [27784, 1],
    (27793, 1): [27788, 1],
    (27799, 1): [27792, 1],
    (27803, 1): [27801, 1],
    (27809, 1): [27806, 1],
    (27817, 1): [27812, 1],
    (27823, 1): [27817, 1],
    (27827, 1): [27825, 1],
    (27847, 1): [27841, 1],
    (27851, 1): [27849, 1],
    (27883, 1): [27880, 1],
    (27893, 1): [27891, 1],
    (27901, 1): [27899, 1],
    (27917, 1): [27915, 1],
    (27919, 1): [27916, 1],
    (27941, 1): [27939, 1],
    (27943, 1): [27938, 1],
    (27947, 1): [27945, 1],
    (27953, 1): [27950, 1],
    (27961, 1): [27948, 1],
    (27967, 1): [27964, 1],
    (27983, 1): [27978, 1],
    (27997, 1): [27992, 1],
    (28001, 1): [27998, 1],
    (28019, 1): [28017, 1],
    (28027, 1): [28025, 1],
    (28031, 1): [28012, 1],
    (28051, 1): [28049, 1],
    (28057, 1): [28052, 1],
    (28069, 1): [28062, 1],
    (28081, 1): [28062, 1],
    (28087, 1): [28084, 1],
    (28097, 1): [28094, 1],
    (28099, 1): [28097, 1],
    (28109, 1): [28107, 1],
    (28111, 1): [28108, 1],
    (28123, 1): [28121, 1],
    (28151, 1): [28144, 1],
    (28163, 1): [28161, 1],
    (28181, 1): [28179, 1],
    (28183, 1): [28180, 1],
    (28201, 1): [28190, 1],
    (28211, 1): [28209, 1],
    (28219, 1): [28216, 1],
    (28229, 1): [28227, 1],
    (28277, 1): [28275, 1],
    (28279, 1): [28276, 1],
    (28283, 1): [28281, 1],
    (28289, 1): [28283, 1],
    (28297, 1): [28292, 1],
    (28307, 1): [28305, 1],
    (28309, 1): [28307, 1],
    (28319, 1): [28312, 1],
    (28349, 1): [28347, 1],
    (28351, 1): [28345, 1],
    (28387, 1): [28385, 1],
    (28393, 1): [28378, 1],
    (28403, 1): [28398, 1],
    (28409, 1): [28406, 1],
    (28411, 1): [28409, 1],
    (28429, 1): [28427, 1],
    (28433, 1): [28430, 1],
    (28439, 1): [28428, 1],
    (28447, 1): [28444, 1],
    (28463, 1): [28458, 1],
    (28477, 1): [28475, 1],
    (28493, 1): [28491, 1],
    (28499, 1): [28497, 1],
    (28513, 1): [28508, 1],
    (28517, 1): [28515, 1],
    (28537, 1): [28532, 1],
    (28541, 1): [28539, 1],
    (28547, 1): [28545, 1],
    (28549, 1): [28547, 1],
    (28559, 1): [28548, 1],
    (28571, 1): [28569, 1],
    (28573, 1): [28571, 1],
    (28579, 1): [28577, 1],
    (28591, 1): [28588, 1],
    (28597, 1): [28595, 1],
    (28603, 1): [28601, 1],
    (28607, 1): [28602, 1],
    (28619, 1): [28617, 1],
    (28621, 1): [28608, 1],
    (28627, 1): [28622, 1],
    (28631, 1): [28620, 1],
    (28643, 1): [28641, 1],
    (28649, 1): [28646, 1],
    (28657, 1): [28652, 1],
    (28661, 1): [28659, 1],
    (28663, 1): [28660, 1],
    (28669, 1): [28663, 1],
    (28687, 1): [28681, 1],
    (28697, 1): [28694, 1],
    (28703, 1): [28698, 1],
    (28711, 1): [28708, 1],
    (28723, 1): [28721, 1],
    (28729, 1): [28707, 1],
    (28751, 1): [28737, 1],
    (28753, 1): [28743, 1],
    (28759, 1): [28756, 1],
    (28771, 1): [28769, 1],
    (28789, 1): [28782, 1],
    (28793, 1): [28790, 1],
    (28807, 1): [28796, 1],
    (28813, 1): [28811, 1],
    (28817, 1): [28814, 1],
    (28837, 1): [28835, 1],
    (28843, 1): [28841, 1],
    (28859, 1): [28857, 1],
    (28867, 1): [28864, 1],
    (28871, 1): [28858, 1],
    (28879, 1): [28876, 1],
    (28901, 1): [28898, 1],
    (28909, 1): [28907, 1],
    (28921, 1): [28910, 1],
    (28927, 1): [28924, 1],
    (28933, 1): [28931, 1],
    (28949, 1): [28947, 1],
    (28961, 1): [28958, 1],
    (28979, 1): [28977, 1],
    (29009, 1): [29006, 1],
    (29017, 1): [29012, 1],
    (29021, 1): [29019, 1],
    (29023, 1): [29020, 1],
    (29027, 1): [29025, 1],
    (29033, 1): [29030, 1],
    (29059, 1): [29057, 1],
    (29063, 1): [29053, 1],
    (29077, 1): [29075, 1],
    (29101, 1): [29099, 1],
    (29123, 1): [29121, 1],
    (29129, 1): [29126, 1],
    (29131, 1): [29129, 1],
    (29137, 1): [29132, 1],
    (29147, 1): [29145, 1],
    (29153, 1): [29150, 1],
    (29167, 1): [29164, 1],
    (29173, 1): [29171, 1],
    (29179, 1): [29166, 1],
    (29191, 1): [29184, 1],
    (29201, 1): [29198, 1],
    (29207, 1): [29202, 1],
    (29209, 1): [29202, 1],
    (29221, 1): [29219, 1],
    (29231, 1): [29218, 1],
    (29243, 1): [29241, 1],
    (29251, 1): [29249, 1],
    (29269, 1): [29263, 1],
    (29287, 1): [29282, 1],
    (29297, 1): [29294, 1],
    (29303, 1): [29296, 1],
    (29311, 1): [29308, 1],
    (29327, 1): [29322, 1],
    (29333, 1): [29331, 1],
    (29339, 1): [29337, 1],
    (29347, 1): [29344, 1],
    (29363, 1): [29361, 1],
    (29383, 1): [29377, 1],
    (29387, 1): [29385, 1],
    (29389, 1): [29387, 1],
    (29399, 1): [29386, 1],
    (29401, 1): [29388, 1],
    (29411, 1): [29409, 1],
    (29423, 1): [29418, 1],
    (29429, 1): [29427, 1],
    (29437, 1): [29435, 1],
    (29443, 1): [29441, 1],
    (29453, 1): [29451, 1],
    (29473, 1): [29468, 1],
    (29483, 1): [29481, 1],
    (29501, 1): [29499, 1],
    (29527, 1): [29524, 1],
    (29531, 1): [29529, 1],
    (29537, 1): [29534, 1],
    (29567, 1): [29562, 1],
    (29569, 1): [29552, 1],
    (29573, 1): [29571, 1],
    (29581, 1): [29571, 1],
    (29587, 1): [29585, 1],
    (29599, 1): [29586, 1],
    (29611, 1): [29608, 1],
    (29629, 1): [29622, 1],
    (29633, 1): [29630, 1],
    (29641, 1): [29634, 1],
    (29663, 1): [29658, 1],
    (29669, 1): [29667, 1],
    (29671, 1): [29665, 1],
    (29683, 1): [29672, 1],
    (29717, 1): [29715, 1],
    (29723, 1): [29721, 1],
    (29741, 1): [29739, 1],
    (29753, 1): [29750, 1],
    (29759, 1): [29752, 1],
    (29761, 1): [29744, 1],
    (29789, 1): [29787, 1],
    (29803, 1): [29796, 1],
    (29819, 1): [29813, 1],
    (29833, 1): [29828, 1],
    (29837, 1): [29835, 1],
    (29851, 1): [29849, 1],
    (29863, 1): [29853, 1],
    (29867, 1): [29865, 1],
    (29873, 1): [29870, 1],
    (29879, 1): [29868, 1],
    (29881, 1): [29874, 1],
    (29917, 1): [29915, 1],
    (29921, 1): [29918, 1],
    (29927, 1): [29922, 1],
    (29947, 1): [29944, 1],
    (29959, 1): [29953, 1],
    (29983, 1): [29978, 1],
    (29989, 1): [29987, 1],
    (30011, 1): [30009, 1],
    (30013, 1): [30011, 1],
    (30029, 1): [30027, 1],
    (30047, 1): [30042, 1],
    (30059, 1): [30057, 1],
    (30071, 1): [30058, 1],
    (30089, 1): [30086, 1],
    (30091, 1): [30070, 1],
    (30097, 1): [30087, 1],
    (30103, 1): [30100, 1],
    (30109, 1): [30107, 1],
    (30113, 1): [30110, 1],
    (30119, 1): [30108, 1],
    (30133, 1): [30128, 1],
    (30137, 1): [30134, 1],
    (30139, 1): [30137, 1],
    (30161, 1): [30158, 1],
    (30169, 1): [30162, 1],
    (30181, 1): [30179, 1],
    (30187, 1): [30182, 1],
    (30197, 1): [30195, 1],
    (30203, 1): [30201, 1],
    (30211, 1): [30209, 1],
    (30223, 1): [30220, 1],
    (30241, 1): [30230, 1],
    (30253, 1): [30251, 1],
    (30259, 1): [30256, 1],
    (30269, 1): [30266, 1],
    (30271, 1): [30268, 1],
    (30293, 1): [30291, 1],
    (30307, 1): [30305, 1],
    (30313, 1): [30308, 1],
    (30319, 1): [30316, 1],
    (30323, 1): [30321, 1],
    (30341, 1): [30339, 1],
    (30347, 1): [30345, 1],
    (30367, 1): [30362, 1],
    (30389, 1): [30387, 1],
    (30391, 1): [30388, 1],
    (30403, 1): [30398, 1],
    (30427, 1): [30422, 1],
    (30431, 1): [30420, 1],
    (30449, 1): [30446, 1],
    (30467, 1): [30465, 1],
    (30469, 1): [30467, 1],
    (30491, 1): [30489, 1],
    (30493, 1): [30487, 1],
    (30497, 1): [30494, 1],
    (30509, 1): [30507, 1],
    (30517, 1): [30515, 1],
    (30529, 1): [30516, 1],
    (30539, 1): [30537, 1],
    (30553, 1): [30548, 1],
    (30557, 1): [30555, 1],
    (30559, 1): [30552, 1],
    (30577, 1): [30572, 1],
    (30593, 1): [30590, 1],
    (30631, 1): [30628, 1],
    (30637, 1): [30635, 1],
    (30643, 1): [30641, 1],
    (30649, 1): [30642, 1],
    (30661, 1): [30659, 1],
    (30671, 1): [30660, 1],
    (30677, 1): [30675, 1],
    (30689, 1): [30686, 1],
    (30697, 1): [30687, 1],
    (30703, 1): [30700, 1],
    (30707, 1): [30705, 1],
    (30713, 1): [30710, 1],
    (30727, 1): [30724, 1],
    (30757, 1): [30752, 1],
    (30763, 1): [30761, 1],
    (30773, 1): [30770, 1],
    (30781, 1): [30779, 1],
    (30803, 1): [30801, 1],
    (30809, 1): [30806, 1],
    (30817, 1): [30812, 1],
    (30829, 1): [30827, 1],
    (30839, 1): [30832, 1],
    (30841, 1): [30834, 1],
    (30851, 1): [30849, 1],
    (30853, 1): [30851, 1],
    (30859, 1): [30857, 1],
    (30869, 1): [30867, 1],
    (30871, 1): [30868, 1],
    (30881, 1): [30878, 1],
    (30893, 1): [30891, 1],
    (30911, 1): [30894, 1],
    (30931, 1): [30929, 1],
    (30937, 1): [30922, 1],
    (30941, 1): [30939, 1],
    (30949, 1): [30939, 1],
    (30971, 1): [30969, 1],
    (30977, 1): [30974, 1],
    (30983, 1): [30978, 1],
    (31013, 1): [31011, 1],
    (31019, 1): [31017, 1],
    (31033, 1): [31023, 1],
    (31039, 1): [31032, 1],
    (31051, 1): [31040, 1],
    (31063, 1): [31060, 1],
    (31069, 1): [31067, 1],
    (31079, 1): [31068, 1],
    (31081, 1): [31068, 1],
    (31091, 1): [31089, 1],
    (31121, 1): [31118, 1],
    (31123, 1): [31120, 1],
    (31139, 1): [31137, 1],
    (31147, 1): [31145, 1],
    (31151, 1): [31144, 1],
    (31153, 1): [31143, 1],
    (31159, 1): [31156, 1],
    (31177, 1): [31170, 1],
    (31181, 1): [31179, 1],
    (31183, 1): [31180, 1],
    (31189, 1): [31176, 1],
    (31193, 1): [31188, 1],
    (31219, 1): [31209, 1],
    (31223, 1): [31218, 1],
    (31231, 1): [31225, 1],
    (31237, 1): [31231, 1],
    (31247, 1): [31242, 1],
    (31249, 1): [31226, 1],
    (31253, 1): [31251, 1],
    (31259, 1): [31257, 1],
    (31267, 1): [31265, 1],
    (31271, 1): [31264, 1],
    (31277, 1): [31275, 1],
    (31307, 1): [31305, 1],
    (31319, 1): [31312, 1],
    (31321, 1): [31314, 1],
    (31327, 1): [31321, 1],
    (31333, 1): [31328, 1],
    (31337, 1): [31334, 1],
    (31357, 1): [31355, 1],
    (31379, 1): [31377, 1],
    (31387, 1): [31385, 1],
    (31391, 1): [31360, 1],
    (31393, 1): [31388, 1],
    (31397, 1): [31395, 1],
    (31469, 1): [31467, 1],
    (31477, 1): [31471, 1],
    (31481, 1): [31475, 1],
    (31489, 1): [31482, 1],
    (31511, 1): [31504, 1],
    (31513, 1): [31506, 1],
    (31517, 1): [31515, 1],
    (31531, 1): [31529, 1],
    (31541, 1): [31538, 1],
    (31543, 1): [31540, 1],
    (31547, 1): [31545, 1],
    (31567, 1): [31561, 1],
    (31573, 1): [31568, 1],
    (31583, 1): [31578, 1],
    (31601, 1): [31598, 1],
    (31607, 1): [31602, 1],
    (31627, 1): [31624, 1],
    (31643, 1): [31641, 1],
    (31649, 1): [31646, 1],
    (31657, 1): [31652, 1],
    (31663, 1): [31660, 1],
    (31667, 1): [31665, 1],
    (31687, 1): [31684, 1],
    (31699, 1): [31697, 1],
    (31721, 1): [31710, 1],
    (31723, 1): [31720, 1],
    (31727, 1): [31722, 1],
    (31729, 1): [31722, 1],
    (31741, 1): [31735, 1],
    (31751, 1): [31740, 1],
    (31769, 1): [31763, 1],
    (31771, 1): [31761, 1],
    (31793, 1): [31790, 1],
    (31799, 1): [31788, 1],
    (31817, 1): [31814, 1],
    (31847, 1): [31842, 1],
    (31849, 1): [31835, 1],
    (31859, 1): [31857, 1],
    (31873, 1): [31862, 1],
    (31883, 1): [31881, 1],
    (31891, 1): [31889, 1],
    (31907, 1): [31905, 1],
    (31957, 1): [31955, 1],
    (31963, 1): [31961, 1],
    (31973, 1): [31971, 1],
    (31981, 1): [31975, 1],
    (31991, 1): [31984, 1],
    (32003, 1): [32001, 1],
    (32009, 1): [32006, 1],
    (32027, 1): [32025, 1],
    (32029, 1): [32027, 1],
    (32051, 1): [32041, 1],
    (32057, 1): [32054, 1],
    (32059, 1): [32057, 1],
    (32063, 1): [32058, 1],
    (32069, 1): [32067, 1],
    (32077, 1): [32075, 1],
    (32083, 1): [32081, 1],
    (32089, 1): [32076, 1],
    (32099, 1): [32097, 1],
    (32117, 1): [32115, 1],
    (32119, 1): [32116, 1],
    (32141, 1): [32139, 1],
    (32143, 1): [32137, 1],
    (32159, 1): [32152, 1],
    (32173, 1): [32168, 1],
    (32183, 1): [32178, 1],
    (32189, 1): [32187, 1],
    (32191, 1): [32185, 1],
    (32203, 1): [32201, 1],
    (32213, 1): [32211, 1],
    (32233, 1): [32228, 1],
    (32237, 1): [32235, 1],
    (32251, 1): [32248, 1],
    (32257, 1): [32242, 1],
    (32261, 1): [32259, 1],
    (32297, 1): [32294, 1],
    (32299, 1): [32287, 1],
    (32303, 1): [32298, 1],
    (32309, 1): [32307, 1],
    (32321, 1): [32315, 1],
    (32323, 1): [32321, 1],
    (32327, 1): [32322, 1],
    (32341, 1): [32339, 1],
    (32353, 1): [32338, 1],
    (32359, 1): [32356, 1],
    (32363, 1): [32361, 1],
    (32369, 1): [32363, 1],
    (32371, 1): [32369, 1],
    (32377, 1): [32372, 1],
    (32381, 1): [32379, 1],
    (32401, 1): [32394, 1],
    (32411, 1): [32409, 1],
    (32413, 1): [32408, 1],
    (32423, 1): [32418, 1],
    (32429, 1): [32426, 1],
    (32441, 1): [32438, 1],
    (32443, 1): [32441, 1],
    (32467, 1): [32465, 1],
    (32479, 1): [32473, 1],
    (32491, 1): [32489, 1],
    (32497, 1): [32490, 1],
    (32503, 1): [32500, 1],
    (32507, 1): [32505, 1],
    (32531, 1): [32529, 1],
    (32533, 1): [32531, 1],
    (32537, 1): [32534, 1],
    (32561, 1): [32555, 1],
    (32563, 1): [32561, 1],
    (32569, 1): [32562, 1],
    (32573, 1): [32571, 1],
    (32579, 1): [32573, 1],
    (32587, 1): [32585, 1],
    (32603, 1): [32601, 1],
    (32609, 1): [32606, 1],
    (32611, 1): [32608, 1],
    (32621, 1): [32618, 1],
    (32633, 1): [32630, 1],
    (32647, 1): [32644, 1],
    (32653, 1): [32651, 1],
    (32687, 1): [32682, 1],
    (32693, 1): [32691, 1],
    (32707, 1): [32704, 1],
    (32713, 1): [32708, 1],
    (32717, 1): [32715, 1],
    (32719, 1): [32716, 1],
    (32749, 1): [32747, 1],
    (32771, 1): [32769, 1],
    (32779, 1): [32776, 1],
    (32783, 1): [32776, 1],
    (32789, 1): [32787, 1],
    (32797, 1): [32795, 1],
    (32801, 1): [32798, 1],
    (32803, 1): [32798, 1],
    (32831, 1): [32818, 1],
    (32833, 1): [32828, 1],
    (32839, 1): [32833, 1],
    (32843, 1): [32841, 1],
    (32869, 1): [32863, 1],
    (32887, 1): [32884, 1],
    (32909, 1): [32907, 1],
    (32911, 1): [32908, 1],
    (32917, 1): [32915, 1],
    (32933, 1): [32931, 1],
    (32939, 1): [32937, 1],
    (32941, 1): [32939, 1],
    (32957, 1): [32945, 1],
    (32969, 1): [32966, 1],
    (32971, 1): [32960, 1],
    (32983, 1): [32980, 1],
    (32987, 1): [32985, 1],
    (32993, 1): [32990, 1],
    (32999, 1): [32992, 1],
    (33013, 1): [33008, 1],
    (33023, 1): [33018, 1],
    (33029, 1): [33027, 1],
    (33037, 1): [33035, 1],
    (33049, 1): [33020, 1],
    (33053, 1): [33051, 1],
    (33071, 1): [33060, 1],
    (33073, 1): [33068, 1],
    (33083, 1): [33081, 1],
    (33091, 1): [33088, 1],
    (33107, 1): [33105, 1],
    (33113, 1): [33110, 1],
    (33119, 1): [33112, 1],
    (33149, 1): [33147, 1],
    (33151, 1): [33148, 1],
    (33161, 1): [33158, 1],
    (33179, 1): [33177, 1],
    (33181, 1): [33175, 1],
    (33191, 1): [33184, 1],
    (33199, 1): [33196, 1],
    (33203, 1): [33201, 1],
    (33211, 1): [33209, 1],
    (33223, 1): [33213, 1],
    (33247, 1): [33242, 1],
    (33287, 1): [33282, 1],
    (33289, 1): [33260, 1],
    (33301, 1): [33299, 1],
    (33311, 1): [33300, 1],
    (33317, 1): [33315, 1],
    (33329, 1): [33326, 1],
    (33331, 1): [33328, 1],
    (33343, 1): [33340, 1],
    (33347, 1): [33345, 1],
    (33349, 1): [33347, 1],
    (33353, 1): [33350, 1],
    (33359, 1): [33352, 1],
    (33377, 1): [33372, 1],
    (33391, 1): [33385, 1],
    (33403, 1): [33400, 1],
    (33409, 1): [33402, 1],
    (33413, 1): [33411, 1],
    (33427, 1): [33425, 1],
    (33457, 1): [33447, 1],
    (33461, 1): [33458, 1],
    (33469, 1): [33467, 1],
    (33479, 1): [33462, 1],
    (33487, 1): [33481, 1],
    (33493, 1): [33491, 1],
    (33503, 1): [33498, 1],
    (33521, 1): [33515, 1],
    (33529, 1): [33522, 1],
    (33533, 1): [33531, 1],
    (33547, 1): [33545, 1],
    (33563, 1): [33561, 1],
    (33569, 1): [33566, 1],
    (33577, 1): [33572, 1],
    (33581, 1): [33579, 1],
    (33587, 1): [33581, 1],
    (33589, 1): [33587, 1],
    (33599, 1): [33588, 1],
    (33601, 1): [33572, 1],
    (33613, 1): [33608, 1],
    (33617, 1): [33614, 1],
    (33619, 1): [33617, 1],
    (33623, 1): [33618, 1],
    (33629, 1): [33627, 1],
    (33637, 1): [33635, 1],
    (33641, 1): [33638, 1],
    (33647, 1): [33642, 1],
    (33679, 1): [33676, 1],
    (33703, 1): [33698, 1],
    (33713, 1): [33710, 1],
    (33721, 1): [33710, 1],
    (33739, 1): [33737, 1],
    (33749, 1): [33747, 1],
    (33751, 1): [33745, 1],
    (33757, 1): [33755, 1],
    (33767, 1): [33762, 1],
    (33769, 1): [33758, 1],
    (33773, 1): [33771, 1],
    (33791, 1): [33784, 1],
    (33797, 1): [33794, 1],
    (33809, 1): [33806, 1],
    (33811, 1): [33796, 1],
    (33827, 1): [33825, 1],
    (33829, 1): [33827, 1],
    (33851, 1): [33849, 1],
    (33857, 1): [33854, 1],
    (33863, 1): [33858, 1],
    (33871, 1): [33856, 1],
    (33889, 1): [33876, 1],
    (33893, 1): [33891, 1],
    (33911, 1): [33900, 1],
    (33923, 1): [33921, 1],
    (33931, 1): [33929, 1],
    (33937, 1): [33932, 1],
    (33941, 1): [33939, 1],
    (33961, 1): [33948, 1],
    (33967, 1): [33964, 1],
    (33997, 1): [33995, 1],
    (34019, 1): [34017, 1],
    (34031, 1): [34024, 1],
    (34033, 1): [34026, 1],
    (34039, 1): [34036, 1],
    (34057, 1): [34052, 1],
    (34061, 1): [34059, 1],
    (34123, 1): [34121, 1],
    (34127, 1): [34122, 1],
    (34129, 1): [34118, 1],
    (34141, 1): [34139, 1],
    (34147, 1): [34144, 1],
    (34157, 1): [34155, 1],
    (34159, 1): [34156, 1],
    (34171, 1): [34169, 1],
    (34183, 1): [34180, 1],
    (34211, 1): [34209, 1],
    (34213, 1): [34211, 1],
    (34217, 1): [34214, 1],
    (34231, 1): [34225, 1],
    (34253, 1): [34251, 1],
    (34259, 1): [34257, 1],
    (34261, 1): [34259, 1],
    (34267, 1): [34265, 1],
    (34273, 1): [34268, 1],
    (34283, 1): [34281, 1],
    (34297, 1): [34292, 1],
    (34301, 1): [34298, 1],
    (34303, 1): [34286, 1],
    (34313, 1): [34310, 1],
    (34319, 1): [34300, 1],
    (34327, 1): [34322, 1],
    (34337, 1): [34334, 1],
    (34351, 1): [34348, 1],
    (34361, 1): [34358, 1],
    (34367, 1): [34362, 1],
    (34369, 1): [34362, 1],
    (34381, 1): [34375, 1],
    (34403, 1): [34401, 1],
    (34421, 1): [34419, 1],
    (34429, 1): [34427, 1],
    (34439, 1): [34428, 1],
    (34457, 1): [34454, 1],
    (34469, 1): [34459, 1],
    (34471, 1): [34465, 1],
    (34483, 1): [34481, 1],
    (34487, 1): [34482, 1],
    (34499, 1): [34497, 1],
    (34501, 1): [34494, 1],
    (34511, 1): [34504, 1],
    (34513, 1): [34502, 1],
    (34519, 1): [34516, 1],
    (34537, 1): [34532, 1],
    (34543, 1): [34537, 1],
    (34549, 1): [34547, 1],
    (34583, 1): [34578, 1],
    (34589, 1): [34587, 1],
    (34591, 1): [34588, 1],
    (34603, 1): [34601, 1],
    (34607, 1): [34597, 1],
    (34613, 1): [34611, 1],
    (34631, 1): [34624, 1],
    (34649, 1): [34646, 1],
    (34651, 1): [34649, 1],
    (34667, 1): [34665, 1],
    (34673, 1): [34670, 1],
    (34679, 1): [34672, 1],
    (34687, 1): [34682, 1],
    (34693, 1): [34687, 1],
    (34703, 1): [34698, 1],
    (34721, 1): [34718, 1],
    (34729, 1): [34716, 1],
    (34739, 1): [34733, 1],
    (34747, 1): [34745, 1],
    (34757, 1): [34755, 1],
    (34759, 1): [34753, 1],
    (34763, 1): [34761, 1],
    (34781, 1): [34779, 1],
    (34807, 1): [34804, 1],
    (34819, 1): [34817, 1],
    (34841, 1): [34838, 1],
    (34843, 1): [34841, 1],
    (34847, 1): [34840, 1],
    (34849, 1): [34842, 1],
    (34871, 1): [34864, 1],
    (34877, 1): [34875, 1],
    (34883, 1): [34881, 1],
    (34897, 1): [34892, 1],
    (34913, 1): [34910, 1],
    (34919, 1): [34900, 1],
    (34939, 1): [34937, 1],
    (34949, 1): [34947, 1],
    (34961, 1): [34958, 1],
    (34963, 1): [34961, 1],
    (34981, 1): [34979, 1],
    (35023, 1): [35018, 1],
    (35027, 1): [35025, 1],
    (35051, 1): [35049, 1],
    (35053, 1): [35051, 1],
    (35059, 1): [35049, 1],
    (35069, 1): [35067, 1],
    (35081, 1): [35078, 1],
    (35083, 1): [35081, 1],
    (35089, 1): [35078, 1],
    (35099, 1): [35097, 1],
    (35107, 1): [35105, 1],
    (35111, 1): [35098, 1],
    (35117, 1): [35115, 1],
    (35129, 1): [35126, 1],
    (35141, 1): [35139, 1],
    (35149, 1): [35147, 1],
    (35153, 1): [35150, 1],
    (35159, 1): [35148, 1],
    (35171, 1): [35169, 1],
    (35201, 1): [35198, 1],
    (35221, 1): [35215, 1],
    (35227, 1): [35225, 1],
    (35251, 1): [35248, 1],
    (35257, 1): [35250, 1],
    (35267, 1): [35265, 1],
    (35279, 1): [35250, 1],
    (35281, 1): [35258, 1],
    (35291, 1): [35289, 1],
    (35311, 1): [35300, 1],
    (35317, 1): [35312, 1],
    (35323, 1): [35320, 1],
    (35327, 1): [35322, 1],
    (35339, 1): [35337, 1],
    (35353, 1): [35348, 1],
    (35363, 1): [35361, 1],
    (35381, 1): [35378, 1],
    (35393, 1): [35390, 1],
    (35401, 1): [35388, 1],
    (35407, 1): [35401, 1],
    (35419, 1): [35417, 1],
    (35423, 1): [35418, 1],
    (35437, 1): [35431, 1],
    (35447, 1): [35442, 1],
    (35449, 1): [35436, 1],
    (35461, 1): [35455, 1],
    (35491, 1): [35484, 1],
    (35507, 1): [35505, 1],
    (35509, 1): [35507, 1],
    (35521, 1): [35514, 1],
    (35527, 1): [35524, 1],
    (35531, 1): [35525, 1],
    (35533, 1): [35531, 1],
    (35537, 1): [35534, 1],
    (35543, 1): [35538, 1],
    (35569, 1): [35558, 1],
    (35573, 1): [35571, 1],
    (35591, 1): [35574, 1],
    (35593, 1): [35588, 1],
    (35597, 1): [35595, 1],
    (35603, 1): [35601, 1],
    (35617, 1): [35606, 1],
    (35671, 1): [35668, 1],
    (35677, 1): [35675, 1],
    (35729, 1): [35726, 1],
    (35731, 1): [35729, 1],
    (35747, 1): [35745, 1],
    (35753, 1): [35750, 1],
    (35759, 1): [35748, 1],
    (35771, 1): [35765, 1],
    (35797, 1): [35795, 1],
    (35801, 1): [35798, 1],
    (35803, 1): [35789, 1],
    (35809, 1): [35796, 1],
    (35831, 1): [35820, 1],
    (35837, 1): [35835, 1],
    (35839, 1): [35833, 1],
    (35851, 1): [35849, 1],
    (35863, 1): [35860, 1],
    (35869, 1): [35859, 1],
    (35879, 1): [35872, 1],
    (35897, 1): [35894, 1],
    (35899, 1): [35897, 1],
    (35911, 1): [35899, 1],
    (35923, 1): [35921, 1],
    (35933, 1): [35931, 1],
    (35951, 1): [35940, 1],
    (35963, 1): [35961, 1],
    (35969, 1): [35966, 1],
    (35977, 1): [35967, 1],
    (35983, 1): [35980, 1],
    (35993, 1): [35990, 1],
    (35999, 1): [35986, 1],
    (36007, 1): [36004, 1],
    (36011, 1): [36009, 1],
    (36013, 1): [36011, 1],
    (36017, 1): [36014, 1],
    (36037, 1): [36035, 1],
    (36061, 1): [36059, 1],
    (36067, 1): [36062, 1],
    (36073, 1): [36068, 1],
    (36083, 1): [36081, 1],
    (36097, 1): [36092, 1],
    (36107, 1): [36105, 1],
    (36109, 1): [36107, 1],
    (36131, 1): [36129, 1],
    (36137, 1): [36134, 1],
    (36151, 1): [36148, 1],
    (36161, 1): [36158, 1],
    (36187, 1): [36184, 1],
    (36191, 1): [36184, 1],
    (36209, 1): [36206, 1],
    (36217, 1): [36198, 1],
    (36229, 1): [36227, 1],
    (36241, 1): [36222, 1],
    (36251, 1): [36249, 1],
    (36263, 1): [36258, 1],
    (36269, 1): [36267, 1],
    (36277, 1): [36275, 1],
    (36293, 1): [36291, 1],
    (36299, 1): [36297, 1],
    (36307, 1): [36305, 1],
    (36313, 1): [36308, 1],
    (36319, 1): [36313, 1],
    (36341, 1): [36339, 1],
    (36343, 1): [36330, 1],
    (36353, 1): [36350, 1],
    (36373, 1): [36371, 1],
    (36383, 1): [36378, 1],
    (36389, 1): [36386, 1],
    (36433, 1): [36428, 1],
    (36451, 1): [36444, 1],
    (36457, 1): [36452, 1],
    (36467, 1): [36465, 1],
    (36469, 1): [36467, 1],
    (36473, 1): [36470, 1],
    (36479, 1): [36472, 1],
    (36493, 1): [36491, 1],
    (36497, 1): [36494, 1],
    (36523, 1): [36521, 1],
    (36527, 1): [36522, 1],
    (36529, 1): [36522, 1],
    (36541, 1): [36531, 1],
    (36551, 1): [36544, 1],
    (36559, 1): [36553, 1],
    (36563, 1): [36561, 1],
    (36571, 1): [36569, 1],
    (36583, 1): [36576, 1],
    (36587, 1): [36585, 1],
    (36599, 1): [36580, 1],
    (36607, 1): [36604, 1],
    (36629, 1): [36627, 1],
    (36637, 1): [36632, 1],
    (36643, 1): [36640, 1],
    (36653, 1): [36651, 1],
    (36671, 1): [36658, 1],
    (36677, 1): [36675, 1],
    (36683, 1): [36681, 1],
    (36691, 1): [36689, 1],
    (36697, 1): [36692, 1],
    (36709, 1): [36707, 1],
    (36713, 1): [36710, 1],
    (36721, 1): [36684, 1],
    (36739, 1): [36737, 1],
    (36749, 1): [36747, 1],
    (36761, 1): [36755, 1],
    (36767, 1): [36762, 1],
    (36779, 1): [36777, 1],
    (36781, 1): [36779, 1],
    (36787, 1): [36785, 1],
    (36791, 1): [36774, 1],
    (36793, 1): [36778, 1],
    (36809, 1): [36806, 1],
    (36821, 1): [36819, 1],
    (36833, 1): [36830, 1],
    (36847, 1): [36844, 1],
    (36857, 1): [36854, 1],
    (36871, 1): [36856, 1],
    (36877, 1): [36875, 1],
    (36887, 1): [36882, 1],
    (36899, 1): [36897, 1],
    (36901, 1): [36899, 1],
    (36913, 1): [36908, 1],
    (36919, 1): [36916, 1],
    (36923, 1): [36921, 1],
    (36929, 1): [36926, 1],
    (36931, 1): [36929, 1],
    (36943, 1): [36940, 1],
    (36947, 1): [36945, 1],
    (36973, 1): [36971, 1],
    (36979, 1): [36976, 1],
    (36997, 1): [36995, 1],
    (37003, 1): [37001, 1],
    (37013, 1): [37011, 1],
    (37019, 1): [37017, 1],
    (37021, 1): [37015, 1],
    (37039, 1): [37036, 1],
    (37049, 1): [37043, 1],
    (37057, 1): [37052, 1],
    (37061, 1): [37059, 1],
    (37087, 1): [37084, 1],
    (37097, 1): [37094, 1],
    (37117, 1): [37115, 1],
    (37123, 1): [37120, 1],
    (37139, 1): [37137, 1],
    (37159, 1): [37156, 1],
    (37171, 1): [37168, 1],
    (37181, 1): [37179, 1],
    (37189, 1): [37187, 1],
    (37199, 1): [37192, 1],
    (37201, 1): [37194, 1],
    (37217, 1): [37214, 1],
    (37223, 1): [37218, 1],
    (37243, 1): [37241, 1],
    (37253, 1): [37251, 1],
    (37273, 1): [37268, 1],
    (37277, 1): [37275, 1],
    (37307, 1): [37305, 1],
    (37309, 1): [37302, 1],
    (37313, 1): [37310, 1],
    (37321, 1): [37298, 1],
    (37337, 1): [37334, 1],
    (37339, 1): [37336, 1],
    (37357, 1): [37351, 1],
    (37361, 1): [37358, 1],
    (37363, 1): [37360, 1],
    (37369, 1): [37362, 1],
    (37379, 1): [37377, 1],
    (37397, 1): [37395, 1],
    (37409, 1): [37406, 1],
    (37423, 1): [37417, 1],
    (37441, 1): [37424, 1],
    (37447, 1): [37444, 1],
    (37463, 1): [37458, 1],
    (37483, 1): [37481, 1],
    (37489, 1): [37470, 1],
    (37493, 1): [37491, 1],
    (37501, 1): [37499, 1],
    (37507, 1): [37490, 1],
    (37511, 1): [37500, 1],
    (37517, 1): [37515, 1],
    (37529, 1): [37526, 1],
    (37537, 1): [37524, 1],
    (37547, 1): [37545, 1],
    (37549, 1): [37547, 1],
    (37561, 1): [37550, 1],
    (37567, 1): [37564, 1],
    (37571, 1): [37569, 1],
    (37573, 1): [37568, 1],
    (37579, 1): [37577, 1],
    (37589, 1): [37587, 1],
    (37591, 1): [37585, 1],
    (37607, 1): [37602, 1],
    (37619, 1): [37617, 1],
    (37633, 1): [37628, 1],
    (37643, 1): [37641, 1],
    (37649, 1): [37646, 1],
    (37657, 1): [37652, 1],
    (37663, 1): [37660, 1],
    (37691, 1): [37685, 1],
    (37693, 1): [37691, 1],
    (37699, 1): [37696, 1],
    (37717, 1): [37712, 1],
    (37747, 1): [37744, 1],
    (37781, 1): [37779, 1],
    (37783, 1): [37780, 1],
    (37799, 1): [37788, 1],
    (37811, 1): [37805, 1],
    (37813, 1): [37811, 1],
    (37831, 1): [37828, 1],
    (37847, 1): [37842, 1],
    (37853, 1): [37851, 1],
    (37861, 1): [37859, 1],
    (37871, 1): [37864, 1],
    (37879, 1): [37872, 1],
    (37889, 1): [37886, 1],
    (37897, 1): [37892, 1],
    (37907, 1): [37905, 1],
    (37951, 1): [37948, 1],
    (37957, 1): [37955, 1],
    (37963, 1): [37961, 1],
    (37967, 1): [37962, 1],
    (37987, 1): [37982, 1],
    (37991, 1): [37984, 1],
    (37993, 1): [37983, 1],
    (37997, 1): [37995, 1],
    (38011, 1): [38009, 1],
    (38039, 1): [38032, 1],
    (38047, 1): [38044, 1],
    (38053, 1): [38048, 1],
    (38069, 1): [38067, 1],
    (38083, 1): [38080, 1],
    (38113, 1): [38106, 1],
    (38119, 1): [38116, 1],
    (38149, 1): [38143, 1],
    (38153, 1): [38150, 1],
    (38167, 1): [38164, 1],
    (38177, 1): [38174, 1],
    (38183, 1): [38178, 1],
    (38189, 1): [38187, 1],
    (38197, 1): [38195, 1],
    (38201, 1): [38198, 1],
    (38219, 1): [38217, 1],
    (38231, 1): [38218, 1],
    (38237, 1): [38235, 1],
    (38239, 1): [38226, 1],
    (38261, 1): [38259, 1],
    (38273, 1): [38270, 1],
    (38281, 1): [38267, 1],
    (38287, 1): [38280, 1],
    (38299, 1): [38297, 1],
    (38303, 1): [38298, 1],
    (38317, 1): [38315, 1],
    (38321, 1): [38318, 1],
    (38327, 1): [38322, 1],
    (38329, 1): [38316, 1],
    (38333, 1): [38331, 1],
    (38351, 1): [38340, 1],
    (38371, 1): [38361, 1],
    (38377, 1): [38372, 1],
    (38393, 1): [38390, 1],
    (38431, 1): [38425, 1],
    (38447, 1): [38442, 1],
    (38449, 1): [38436, 1],
    (38453, 1): [38451, 1],
    (38459, 1): [38457, 1],
    (38461, 1): [38448, 1],
    (38501, 1): [38499, 1],
    (38543, 1): [38538, 1],
    (38557, 1): [38555, 1],
    (38561, 1): [38558, 1],
    (38567, 1): [38562, 1],
    (38569, 1): [38555, 1],
    (38593, 1): [38588, 1],
    (38603, 1): [38601, 1],
    (38609, 1): [38606, 1],
    (38611, 1): [38608, 1],
    (38629, 1): [38627, 1],
    (38639, 1): [38610, 1],
    (38651, 1): [38649, 1],
    (38653, 1): [38651, 1],
    (38669, 1): [38667, 1],
    (38671, 1): [38665, 1],
    (38677, 1): [38672, 1],
    (38693, 1): [38691, 1],
    (38699, 1): [38697, 1],
    (38707, 1): [38705, 1],
    (38711, 1): [38704, 1],
    (38713, 1): [38708, 1],
    (38723, 1): [38721, 1],
    (38729, 1): [38726, 1],
    (38737, 1): [38732, 1],
    (38747, 1): [38745, 1],
    (38749, 1): [38747, 1],
    (38767, 1): [38762, 1],
    (38783, 1): [38778, 1],
    (38791, 1): [38785, 1],
    (38803, 1): [38798, 1],
    (38821, 1): [38819, 1],
    (38833, 1): [38828, 1],
    (38839, 1): [38833, 1],
    (38851, 1): [38848, 1],
    (38861, 1): [38847, 1],
    (38867, 1): [38865, 1],
    (38873, 1): [38870, 1],
    (38891, 1): [38889, 1],
    (38903, 1): [38898, 1],
    (38917, 1): [38912, 1],
    (38921, 1): [38915, 1],
    (38923, 1): [38921, 1],
    (38933, 1): [38931, 1],
    (38953, 1): [38948, 1],
    (38959, 1): [38956, 1],
    (38971, 1): [38969, 1],
    (38977, 1): [38972, 1],
    (38993, 1): [38990, 1],
    (39019, 1): [39017, 1],
    (39023, 1): [39018, 1],
    (39041, 1): [39038, 1],
    (39043, 1): [39041, 1],
    (39047, 1): [39042, 1],
    (39079, 1): [39076, 1],
    (39089, 1): [39086, 1],
    (39097, 1): [39092, 1],
    (39103, 1): [39098, 1],
    (39107, 1): [39105, 1],
    (39113, 1): [39110, 1],
    (39119, 1): [39108, 1],
    (39133, 1): [39128, 1],
    (39139, 1): [39132, 1],
    (39157, 1): [39151, 1],
    (39161, 1): [39158, 1],
    (39163, 1): [39161, 1],
    (39181, 1): [39175, 1],
    (39191, 1): [39180, 1],
    (39199, 1): [39182, 1],
    (39209, 1): [39206, 1],
    (39217, 1): [39210, 1],
    (39227, 1): [39225, 1],
    (39229, 1): [39227, 1],
    (39233, 1): [39230, 1],
    (39239, 1): [39232, 1],
    (39241, 1): [39234, 1],
    (39251, 1): [39249, 1],
    (39293, 1): [39291, 1],
    (39301, 1): [39294, 1],
    (39313, 1): [39303, 1],
    (39317, 1): [39315, 1],
    (39323, 1): [39321, 1],
    (39341, 1): [39339, 1],
    (39343, 1): [39340, 1],
    (39359, 1): [39348, 1],
    (39367, 1): [39364, 1],
    (39371, 1): [39369, 1],
    (39373, 1): [39351, 1],
    (39383, 1): [39378, 1],
    (39397, 1): [39395, 1],
    (39409, 1): [39402, 1],
    (39419, 1): [39417, 1],
    (39439, 1): [39436, 1],
    (39443, 1): [39441, 1],
    (39451, 1): [39449, 1],
    (39461, 1): [39459, 1],
    (39499, 1): [39497, 1],
    (39503, 1): [39498, 1],
    (39509, 1): [39506, 1],
    (39511, 1): [39508, 1],
    (39521, 1): [39518, 1],
    (39541, 1): [39539, 1],
    (39551, 1): [39544, 1],
    (39563, 1): [39561, 1],
    (39569, 1): [39566, 1],
    (39581, 1): [39579, 1],
    (39607, 1): [39604, 1],
    (39619, 1): [39617, 1],
    (39623, 1): [39618, 1],
    (39631, 1): [39628, 1],
    (39659, 1): [39657, 1],
    (39667, 1): [39664, 1],
    (39671, 1): [39664, 1],
    (39679, 1): [39673, 1],
    (39703, 1): [39698, 1],
    (39709, 1): [39703, 1],
    (39719, 1): [39712, 1],
    (39727, 1): [39724, 1],
    (39733, 1): [39731, 1],
    (39749, 1): [39747, 1],
    (39761, 1): [39758, 1],
    (39769, 1): [39756, 1],
    (39779, 1): [39777, 1],
    (39791, 1): [39780, 1],
    (39799, 1): [39796, 1],
    (39821, 1): [39819, 1],
    (39827, 1): [39825, 1],
    (39829, 1): [39823, 1],
    (39839, 1): [39832, 1],
    (39841, 1): [39810, 1],
    (39847, 1): [39842, 1],
    (39857, 1): [39854, 1],
    (39863, 1): [39858, 1],
    (39869, 1): [39867, 1],
    (39877, 1): [39875, 1],
    (39883, 1): [39880, 1],
    (39887, 1): [39880, 1],
    (39901, 1): [39899, 1],
    (39929, 1): [39926, 1],
    (39937, 1): [39932, 1],
    (39953, 1): [39950, 1],
    (39971, 1): [39969, 1],
    (39979, 1): [39976, 1],
    (39983, 1): [39978, 1],
    (39989, 1): [39987, 1],
    (40009, 1): [39998, 1],
    (40013, 1): [40011, 1],
    (40031, 1): [40012, 1],
    (40037, 1): [40035, 1],
    (40039, 1): [40033, 1],
    (40063, 1): [40060, 1],
    (40087, 1): [40084, 1],
    (40093, 1): [40091, 1],
    (40099, 1): [40096, 1],
    (40111, 1): [40108, 1],
    (40123, 1): [40121, 1],
    (40127, 1): [40122, 1],
    (40129, 1): [40122, 1],
    (40151, 1): [40140, 1],
    (40153, 1): [40148, 1],
    (40163, 1): [40161, 1],
    (40169, 1): [40166, 1],
    (40177, 1): [40167, 1],
    (40189, 1): [40187, 1],
    (40193, 1): [40190, 1],
    (40213, 1): [40207, 1],
    (40231, 1): [40228, 1],
    (40237, 1): [40231, 1],
    (40241, 1): [40238, 1],
    (40253, 1): [40251, 1],
    (40277, 1): [40275, 1],
    (40283, 1): [40281, 1],
    (40289, 1): [40286, 1],
    (40343, 1): [40338, 1],
    (40351, 1): [40348, 1],
    (40357, 1): [40352, 1],
    (40361, 1): [40358, 1],
    (40387, 1): [40385, 1],
    (40423, 1): [40420, 1],
    (40427, 1): [40425, 1],
    (40429, 1): [40415, 1],
    (40433, 1): [40428, 1],
    (40459, 1): [40457, 1],
    (40471, 1): [40468, 1],
    (40483, 1): [40481, 1],
    (40487, 1): [40482, 1],
    (40493, 1): [40491, 1],
    (40499, 1): [40497, 1],
    (40507, 1): [40505, 1],
    (40519, 1): [40513, 1],
    (40529, 1): [40526, 1],
    (40531, 1): [40529, 1],
    (40543, 1): [40540, 1],
    (40559, 1): [40552, 1],
    (40577, 1): [40574, 1],
    (40583, 1): [40578, 1],
    (40591, 1): [40578, 1],
    (40597, 1): [40595, 1],
    (40609, 1): [40587, 1],
    (40627, 1): [40625, 1],
    (40637, 1): [40635, 1],
    (40639, 1): [40632, 1],
    (40693, 1): [40691, 1],
    (40697, 1): [40694, 1],
    (40699, 1): [40697, 1],
    (40709, 1): [40707, 1],
    (40739, 1): [40737, 1],
    (40751, 1): [40737, 1],
    (40759, 1): [40756, 1],
    (40763, 1): [40761, 1],
    (40771, 1): [40761, 1],
    (40787, 1): [40785, 1],
    (40801, 1): [40788, 1],
    (40813, 1): [40811, 1],
    (40819, 1): [40816, 1],
    (40823, 1): [40818, 1],
    (40829, 1): [40827, 1],
    (40841, 1): [40838, 1],
    (40847, 1): [40842, 1],
    (40849, 1): [40838, 1],
    (40853, 1): [40851, 1],
    (40867, 1): [40865, 1],
    (40879, 1): [40873, 1],
    (40883, 1): [40881, 1],
    (40897, 1): [40892, 1],
    (40903, 1): [40900, 1],
    (40927, 1): [40924, 1],
    (40933, 1): [40931, 1],
    (40939, 1): [40937, 1],
    (40949, 1): [40947, 1],
    (40961, 1): [40958, 1],
    (40973, 1): [40971, 1],
    (40993, 1): [40988, 1],
    (41011, 1): [41009, 1],
    (41017, 1): [41012, 1],
    (41023, 1): [41018, 1],
    (41039, 1): [41028, 1],
    (41047, 1): [41042, 1],
    (41051, 1): [41049, 1],
    (41057, 1): [41054, 1],
    (41077, 1): [41075, 1],
    (41081, 1): [41078, 1],
    (41113, 1): [41108, 1],
    (41117, 1): [41115, 1],
    (41131, 1): [41121, 1],
    (41141, 1): [41139, 1],
    (41143, 1): [41140, 1],
    (41149, 1): [41147, 1],
    (41161, 1): [41139, 1],
    (41177, 1): [41174, 1],
    (41179, 1): [41176, 1],
    (41183, 1): [41178, 1],
    (41189, 1): [41187, 1],
    (41201, 1): [41198, 1],
    (41203, 1): [41200, 1],
    (41213, 1): [41211, 1],
    (41221, 1): [41219, 1],
    (41227, 1): [41225, 1],
    (41231, 1): [41224, 1],
    (41233, 1): [41228, 1],
    (41243, 1): [41241, 1],
    (41257, 1): [41252, 1],
    (41263, 1): [41258, 1],
    (41269, 1): [41267, 1],
    (41281, 1): [41264, 1],
    (41299, 1): [41297, 1],
    (41333, 1): [41331, 1],
    (41341, 1): [41339, 1],
    (41351, 1): [41344, 1],
    (41357, 1): [41355, 1],
    (41381, 1): [41378, 1],
    (41387, 1): [41385, 1],
    (41389, 1): [41383, 1],
    (41399, 1): [41392, 1],
    (41411, 1): [41409, 1],
    (41413, 1): [41407, 1],
    (41443, 1): [41441, 1],
    (41453, 1): [41451, 1],
    (41467, 1): [41453, 1],
    (41479, 1): [41476, 1],
    (41491, 1): [41478, 1],
    (41507, 1): [41505, 1],
    (41513, 1): [41510, 1],
    (41519, 1): [41512, 1],
    (41521, 1): [41499, 1],
    (41539, 1): [41536, 1],
    (41543, 1): [41538, 1],
    (41549, 1): [41546, 1],
    (41579, 1): [41577, 1],
    (41593, 1): [41588, 1],
    (41597, 1): [41595, 1],
    (41603, 1): [41601, 1],
    (41609, 1): [41606, 1],
    (41611, 1): [41609, 1],
    (41617, 1): [41612, 1],
    (41621, 1): [41618, 1],
    (41627, 1): [41625, 1],
    (41641, 1): [41628, 1],
    (41647, 1): [41644, 1],
    (41651, 1): [41649, 1],
    (41659, 1): [41656, 1],
    (41669, 1): [41667, 1],
    (41681, 1): [41678, 1],
    (41687, 1): [41682, 1],
    (41719, 1): [41713, 1],
    (41729, 1): [41726, 1],
    (41737, 1): [41732, 1],
    (41759, 1): [41752, 1],
    (41761, 1): [41742, 1],
    (41771, 1): [41769, 1],
    (41777, 1): [41774, 1],
    (41801, 1): [41798, 1],
    (41809, 1): [41788, 1],
    (41813, 1): [41811, 1],
    (41843, 1): [41841, 1],
    (41849, 1): [41846, 1],
    (41851, 1): [41836, 1],
    (41863, 1): [41860, 1],
    (41879, 1): [41866, 1],
    (41887, 1): [41884, 1],
    (41893, 1): [41891, 1],
    (41897, 1): [41894, 1],
    (41903, 1): [41898, 1],
    (41911, 1): [41908, 1],
    (41927, 1): [41922, 1],
    (41941, 1): [41939, 1],
    (41947, 1): [41942, 1],
    (41953, 1): [41948, 1],
    (41957, 1): [41955, 1],
    (41959, 1): [41953, 1],
    (41969, 1): [41966, 1],
    (41981, 1): [41979, 1],
    (41983, 1): [41977, 1],
    (41999, 1): [41988, 1],
    (42013, 1): [42007, 1],
    (42017, 1): [42014, 1],
    (42019, 1): [42017, 1],
    (42023, 1): [42018, 1],
    (42043, 1): [42038, 1],
    (42061, 1): [42055, 1],
    (42071, 1): [42064, 1],
    (42073, 1): [42068, 1],
    (42083, 1): [42081, 1],
    (42089, 1): [42086, 1],
    (42101, 1): [42099, 1],
    (42131, 1): [42129, 1],
    (42139, 1): [42137, 1],
    (42157, 1): [42155, 1],
    (42169, 1): [42158, 1],
    (42179, 1): [42177, 1],
    (42181, 1): [42171, 1],
    (42187, 1): [42174, 1],
    (42193, 1): [42178, 1],
    (42197, 1): [42195, 1],
    (42209, 1): [42206, 1],
    (42221, 1): [42219, 1],
    (42223, 1): [42218, 1],
    (42227, 1): [42225, 1],
    (42239, 1): [42232, 1],
    (42257, 1): [42254, 1],
    (42281, 1): [42270, 1],
    (42283, 1): [42281, 1],
    (42293, 1): [42291, 1],
    (42299, 1): [42297, 1],
    (42307, 1): [42304, 1],
    (42323, 1): [42321, 1],
    (42331, 1): [42328, 1],
    (42337, 1): [42332, 1],
    (42349, 1): [42347, 1],
    (42359, 1): [42352, 1],
    (42373, 1): [42368, 1],
    (42379, 1): [42377, 1],
    (42391, 1): [42385, 1],
    (42397, 1): [42395, 1],
    (42403, 1): [42401, 1],
    (42407, 1): [42402, 1],
    (42409, 1): [42395, 1],
    (42433, 1): [42423, 1],
    (42437, 1): [42435, 1],
    (42443, 1): [42441, 1],
    (42451, 1): [42448, 1],
    (42457, 1): [42446, 1],
    (42461, 1): [42459, 1],
    (42463, 1): [42460, 1],
    (42467, 1): [42462, 1],
    (42473, 1): [42470, 1],
    (42487, 1): [42482, 1],
    (42491, 1): [42489, 1],
    (42499, 1): [42497, 1],
    (42509, 1): [42507, 1],
    (42533, 1): [42531, 1],
    (42557, 1): [42555, 1],
    (42569, 1): [42566, 1],
    (42571, 1): [42569, 1],
    (42577, 1): [42570, 1],
    (42589, 1): [42587, 1],
    (42611, 1): [42609, 1],
    (42641, 1): [42638, 1],
    (42643, 1): [42641, 1],
    (42649, 1): [42638, 1],
    (42667, 1): [42660, 1],
    (42677, 1): [42675, 1],
    (42683, 1): [42681, 1],
    (42689, 1): [42686, 1],
    (42697, 1): [42692, 1],
    (42701, 1): [42698, 1],
    (42703, 1): [42698, 1],
    (42709, 1): [42703, 1],
    (42719, 1): [42700, 1],
    (42727, 1): [42724, 1],
    (42737, 1): [42734, 1],
    (42743, 1): [42736, 1],
    (42751, 1): [42745, 1],
    (42767, 1): [42762, 1],
    (42773, 1): [42770, 1],
    (42787, 1): [42782, 1],
    (42793, 1): [42788, 1],
    (42797, 1): [42795, 1],
    (42821, 1): [42819, 1],
    (42829, 1): [42827, 1],
    (42839, 1): [42828, 1],
    (42841, 1): [42818, 1],
    (42853, 1): [42851, 1],
    (42859, 1): [42849, 1],
    (42863, 1): [42858, 1],
    (42899, 1): [42897, 1],
    (42901, 1): [42895, 1],
    (42923, 1): [42921, 1],
    (42929, 1): [42926, 1],
    (42937, 1): [42932, 1],
    (42943, 1): [42940, 1],
    (42953, 1): [42950, 1],
    (42961, 1): [42950, 1],
    (42967, 1): [42964, 1],
    (42979, 1): [42976, 1],
    (42989, 1): [42987, 1],
    (43003, 1): [42998, 1],
    (43013, 1): [43011, 1],
    (43019, 1): [43017, 1],
    (43037, 1): [43035, 1],
    (43049, 1): [43046, 1],
    (43051, 1): [43049, 1],
    (43063, 1): [43060, 1],
    (43067, 1): [43065, 1],
    (43093, 1): [43088, 1],
    (43103, 1): [43098, 1],
    (43117, 1): [43115, 1],
    (43133, 1): [43131, 1],
    (43151, 1): [43140, 1],
    (43159, 1): [43156, 1],
    (43177, 1): [43172, 1],
    (43189, 1): [43187, 1],
    (43201, 1): [43178, 1],
    (43207, 1): [43204, 1],
    (43223, 1): [43218, 1],
    (43237, 1): [43235, 1],
    (43261, 1): [43259, 1],
    (43271, 1): [43258, 1],
    (43283, 1): [43281, 1],
    (43291, 1): [43288, 1],
    (43313, 1): [43310, 1],
    (43319, 1): [43308, 1],
    (43321, 1): [43308, 1],
    (43331, 1): [43329, 1],
    (43391, 1): [43374, 1],
    (43397, 1): [43395, 1],
    (43399, 1): [43386, 1],
    (43403, 1): [43401, 1],
    (43411, 1): [43408, 1],
    (43427, 1): [43425, 1],
    (43441, 1): [43430, 1],
    (43451, 1): [43449, 1],
    (43457, 1): [43454, 1],
    (43481, 1): [43475, 1],
    (43487, 1): [43482, 1],
    (43499, 1): [43497, 1],
    (43517, 1): [43515, 1],
    (43541, 1): [43539, 1],
    (43543, 1): [43540, 1],
    (43573, 1): [43571, 1],
    (43577, 1): [43574, 1],
    (43579, 1): [43577, 1],
    (43591, 1): [43580, 1],
    (43597, 1): [43595, 1],
    (43607, 1): [43602, 1],
    (43609, 1): [43595, 1],
    (43613, 1): [43611, 1],
    (43627, 1): [43625, 1],
    (43633, 1): [43628, 1],
    (43649, 1): [43646, 1],
    (43651, 1): [43649, 1],
    (43661, 1): [43659, 1],
    (43669, 1): [43667, 1],
    (43691, 1): [43685, 1],
    (43711, 1): [43698, 1],
    (43717, 1): [43712, 1],
    (43721, 1): [43718, 1],
    (43753, 1): [43746, 1],
    (43759, 1): [43756, 1],
    (43777, 1): [43772, 1],
    (43781, 1): [43779, 1],
    (43783, 1): [43780, 1],
    (43787, 1): [43785, 1],
    (43789, 1): [43783, 1],
    (43793, 1): [43790, 1],
    (43801, 1): [43770, 1],
    (43853, 1): [43851, 1],
    (43867, 1): [43864, 1],
    (43889, 1): [43886, 1],
    (43891, 1): [43888, 1],
    (43913, 1): [43910, 1],
    (43933, 1): [43931, 1],
    (43943, 1): [43938, 1],
    (43951, 1): [43945, 1],
    (43961, 1): [43955, 1],
    (43963, 1): [43951, 1],
    (43969, 1): [43958, 1],
    (43973, 1): [43971, 1],
    (43987, 1): [43985, 1],
    (43991, 1): [43974, 1],
    (43997, 1): [43995, 1],
    (44017, 1): [44006, 1],
    (44021, 1): [44019, 1],
    (44027, 1): [44025, 1],
    (44029, 1): [44023, 1],
    (44041, 1): [44030, 1],
    (44053, 1): [44051, 1],
    (44059, 1): [44057, 1],
    (44071, 1): [44068, 1],
    (44087, 1): [44082, 1],
    (44089, 1): [44076, 1],
    (44101, 1): [44095, 1],
    (44111, 1): [44104, 1],
    (44119, 1): [44113, 1],
    (44123, 1): [44121, 1],
    (44129, 1): [44126, 1],
    (44131, 1): [44129, 1],
    (44159, 1): [44148, 1],
    (44171, 1): [44169, 1],
    (44179, 1): [44177, 1],
    (44189, 1): [44187, 1],
    (44201, 1): [44195, 1],
    (44203, 1): [44198, 1],
    (44207, 1): [44202, 1],
    (44221, 1): [44219, 1],
    (44249, 1): [44246, 1],
    (44257, 1): [44252, 1],
    (44263, 1): [44260, 1],
    (44267, 1): [44265, 1],
    (44269, 1): [44267, 1],
    (44273, 1): [44270, 1],
    (44279, 1): [44272, 1],
    (44281, 1): [44274, 1],
    (44293, 1): [44291, 1],
    (44351, 1): [44332, 1],
    (44357, 1): [44355, 1],
    (44371, 1): [44369, 1],
    (44381, 1): [44379, 1],
    (44383, 1): [44380, 1],
    (44389, 1): [44387, 1],
    (44417, 1): [44414, 1],
    (44449, 1): [44436, 1],
    (44453, 1): [44451, 1],
    (44483, 1): [44481, 1],
    (44491, 1): [44478, 1],
    (44497, 1): [44492, 1],
    (44501, 1): [44499, 1],
    (44507, 1): [44505, 1],
    (44519, 1): [44506, 1],
    (44531, 1): [44529, 1],
    (44533, 1): [44531, 1],
    (44537, 1): [44534, 1],
    (44543, 1): [44538, 1],
    (44549, 1): [44547, 1],
    (44563, 1): [44560, 1],
    (44579, 1): [44577, 1],
    (44587, 1): [44584, 1],
    (44617, 1): [44612, 1],
    (44621, 1): [44619, 1],
    (44623, 1): [44618, 1],
    (44633, 1): [44630, 1],
    (44641, 1): [44622, 1],
    (44647, 1): [44642, 1],
    (44651, 1): [44649, 1],
    (44657, 1): [44654, 1],
    (44683, 1): [44681, 1],
    (44687, 1): [44682, 1],
    (44699, 1): [44697, 1],
    (44701, 1): [44699, 1],
    (44711, 1): [44704, 1],
    (44729, 1): [44726, 1],
    (44741, 1): [44739, 1],
    (44753, 1): [44750, 1],
    (44771, 1): [44765, 1],
    (44773, 1): [44768, 1],
    (44777, 1): [44774, 1],
    (44789, 1): [44787, 1],
    (44797, 1): [44795, 1],
    (44809, 1): [44798, 1],
    (44819, 1): [44817, 1],
    (44839, 1): [44833, 1],
    (44843, 1): [44838, 1],
    (44851, 1): [44841, 1],
    (44867, 1): [44865, 1],
    (44879, 1): [44872, 1],
    (44887, 1): [44882, 1],
    (44893, 1): [44888, 1],
    (44909, 1): [44907, 1],
    (44917, 1): [44912, 1],
    (44927, 1): [44920, 1],
    (44939, 1): [44937, 1],
    (44953, 1): [44948, 1],
    (44959, 1): [44956, 1],
    (44963, 1): [44961, 1],
    (44971, 1): [44968, 1],
    (44983, 1): [44980, 1],
    (44987, 1): [44985, 1],
    (45007, 1): [45004, 1],
    (45013, 1): [45011, 1],
    (45053, 1): [45051, 1],
    (45061, 1): [45059, 1],
    (45077, 1): [45075, 1],
    (45083, 1): [45081, 1],
    (45119, 1): [45112, 1],
    (45121, 1): [45114, 1],
    (45127, 1): [45115, 1],
    (45131, 1): [45129, 1],
    (45137, 1): [45134, 1],
    (45139, 1): [45137, 1],
    (45161, 1): [45158, 1],
    (45179, 1): [45173, 1],
    (45181, 1): [45179, 1],
    (45191, 1): [45180, 1],
    (45197, 1): [45195, 1],
    (45233, 1): [45230, 1],
    (45247, 1): [45242, 1],
    (45259, 1): [45256, 1],
    (45263, 1): [45258, 1],
    (45281, 1): [45278, 1],
    (45289, 1): [45275, 1],
    (45293, 1): [45291, 1],
    (45307, 1): [45305, 1],
    (45317, 1): [45315, 1],
    (45319, 1): [45316, 1],
    (45329, 1): [45326, 1],
    (45337, 1): [45332, 1],
    (45341, 1): [45339, 1],
    (45343, 1): [45337, 1],
    (45361, 1): [45350, 1],
    (45377, 1): [45374, 1],
    (45389, 1): [45387, 1],
    (45403, 1): [45400, 1],
    (45413, 1): [45411, 1],
    (45427, 1): [45424, 1],
    (45433, 1): [45426, 1],
    (45439, 1): [45436, 1],
    (45481, 1): [45468, 1],
    (45491, 1): [45489, 1],
    (45497, 1): [45494, 1],
    (45503, 1): [45498, 1],
    (45523, 1): [45521, 1],
    (45533, 1): [45531, 1],
    (45541, 1): [45531, 1],
    (45553, 1): [45548, 1],
    (45557, 1): [45554, 1],
    (45569, 1): [45566, 1],
    (45587, 1): [45585, 1],
    (45589, 1): [45587, 1],
    (45599, 1): [45592, 1],
    (45613, 1): [45611, 1],
    (45631, 1): [45619, 1],
    (45641, 1): [45630, 1],
    (45659, 1): [45657, 1],
    (45667, 1): [45665, 1],
    (45673, 1): [45668, 1],
    (45677, 1): [45675, 1],
    (45691, 1): [45684, 1],
    (45697, 1): [45687, 1],
    (45707, 1): [45705, 1],
    (45737, 1): [45734, 1],
    (45751, 1): [45748, 1],
    (45757, 1): [45755, 1],
    (45763, 1): [45758, 1],
    (45767, 1): [45762, 1],
    (45779, 1): [45777, 1],
    (45817, 1): [45812, 1],
    (45821, 1): [45819, 1],
    (45823, 1): [45820, 1],
    (45827, 1): [45825, 1],
    (45833, 1): [45828, 1],
    (45841, 1): [45834, 1],
    (45853, 1): [45848, 1],
    (45863, 1): [45853, 1],
    (45869, 1): [45867, 1],
    (45887, 1): [45882, 1],
    (45893, 1): [45891, 1],
    (45943, 1): [45937, 1],
    (45949, 1): [45947, 1],
    (45953, 1): [45950, 1],
    (45959, 1): [45952, 1],
    (45971, 1): [45969, 1],
    (45979, 1): [45977, 1],
    (45989, 1): [45987, 1],
    (46021, 1): [46019, 1],
    (46027, 1): [46025, 1],
    (46049, 1): [46046, 1],
    (46051, 1): [46048, 1],
    (46061, 1): [46059, 1],
    (46073, 1): [46068, 1],
    (46091, 1): [46089, 1],
    (46093, 1): [46091, 1],
    (46099, 1): [46097, 1],
    (46103, 1): [46093, 1],
    (46133, 1): [46131, 1],
    (46141, 1): [46131, 1],
    (46147, 1): [46145, 1],
    (46153, 1): [46148, 1],
    (46171, 1): [46168, 1],
    (46181, 1): [46179, 1],
    (46183, 1): [46180, 1],
    (46187, 1): [46185, 1],
    (46199, 1): [46182, 1],
    (46219, 1): [46216, 1],
    (46229, 1): [46227, 1],
    (46237, 1): [46235, 1],
    (46261, 1): [46259, 1],
    (46271, 1): [46264, 1],
    (46273, 1): [46268, 1],
    (46279, 1): [46276, 1],
    (46301, 1): [46299, 1],
    (46307, 1): [46305, 1],
    (46309, 1): [46307, 1],
    (46327, 1): [46324, 1],
    (46337, 1): [46334, 1],
    (46349, 1): [46347, 1],
    (46351, 1): [46348, 1],
    (46381, 1): [46374, 1],
    (46399, 1): [46396, 1],
    (46411, 1): [46408, 1],
    (46439, 1): [46432, 1],
    (46441, 1): [46434, 1],
    (46447, 1): [46444, 1],
    (46451, 1): [46445, 1],
    (46457, 1): [46454, 1],
    (46471, 1): [46468, 1],
    (46477, 1): [46475, 1],
    (46489, 1): [46460, 1],
    (46499, 1): [46497, 1],
    (46507, 1): [46505, 1],
    (46511, 1): [46500, 1],
    (46523, 1): [46518, 1],
    (46549, 1): [46547, 1],
    (46559, 1): [46552, 1],
    (46567, 1): [46564, 1],
    (46573, 1): [46571, 1],
    (46589, 1): [46587, 1],
    (46591, 1): [46585, 1],
    (46601, 1): [46598, 1],
    (46619, 1): [46613, 1],
    (46633, 1): [46628, 1],
    (46639, 1): [46633, 1],
    (46643, 1): [46641, 1],
    (46649, 1): [46634, 1],
    (46663, 1): [46658, 1],
    (46679, 1): [46662, 1],
    (46681, 1): [46670, 1],
    (46687, 1): [46684, 1],
    (46691, 1): [46689, 1],
    (46703, 1): [46698, 1],
    (46723, 1): [46721, 1],
    (46727, 1): [46722, 1],
    (46747, 1): [46745, 1],
    (46751, 1): [46740, 1],
    (46757, 1): [46755, 1],
    (46769, 1): [46766, 1],
    (46771, 1): [46769, 1],
    (46807, 1): [46804, 1],
    (46811, 1): [46809, 1],
    (46817, 1): [46814, 1],
    (46819, 1): [46817, 1],
    (46829, 1): [46827, 1],
    (46831, 1): [46828, 1],
    (46853, 1): [46851, 1],
    (46861, 1): [46855, 1],
    (46867, 1): [46865, 1],
    (46877, 1): [46875, 1],
    (46889, 1): [46886, 1],
    (46901, 1): [46890, 1],
    (46919, 1): [46908, 1],
    (46933, 1): [46931, 1],
    (46957, 1): [46952, 1],
    (46993, 1): [46988, 1],
    (46997, 1): [46995, 1],
    (47017, 1): [47010, 1],
    (47041, 1): [47012, 1],
    (47051, 1): [47049, 1],
    (47057, 1): [47054, 1],
    (47059, 1): [47057, 1],
    (47087, 1): [47082, 1],
    (47093, 1): [47091, 1],
    (47111, 1): [47104, 1],
    (47119, 1): [47116, 1],
    (47123, 1): [47121, 1],
    (47129, 1): [47126, 1],
    (47137, 1): [47132, 1],
    (47143, 1): [47137, 1],
    (47147, 1): [47145, 1],
    (47149, 1): [47147, 1],
    (47161, 1): [47144, 1],
    (47189, 1): [47187, 1],
    (47207, 1): [47202, 1],
    (47221, 1): [47215, 1],
    (47237, 1): [47235, 1],
    (47251, 1): [47241, 1],
    (47269, 1): [47263, 1],
    (47279, 1): [47272, 1],
    (47287, 1): [47282, 1],
    (47293, 1): [47287, 1],
    (47297, 1): [47294, 1],
    (47303, 1): [47298, 1],
    (47309, 1): [47307, 1],
    (47317, 1): [47311, 1],
    (47339, 1): [47337, 1],
    (47351, 1): [47338, 1],
    (47353, 1): [47348, 1],
    (47363, 1): [47361, 1],
    (47381, 1): [47379, 1],
    (47387, 1): [47385, 1],
    (47389, 1): [47387, 1],
    (47407, 1): [47404, 1],
    (47417, 1): [47414, 1],
    (47419, 1): [47417, 1],
    (47431, 1): [47419, 1],
    (47441, 1): [47438, 1],
    (47459, 1): [47457, 1],
    (47491, 1): [47489, 1],
    (47497, 1): [47492, 1],
    (47501, 1): [47498, 1],
    (47507, 1): [47505, 1],
    (47513, 1): [47510, 1],
    (47521, 1): [47504, 1],
    (47527, 1): [47524, 1],
    (47533, 1): [47531, 1],
    (47543, 1): [47538, 1],
    (47563, 1): [47561, 1],
    (47569, 1): [47552, 1],
    (47581, 1): [47579, 1],
    (47591, 1): [47580, 1],
    (47599, 1): [47596, 1],
    (47609, 1): [47603, 1],
    (47623, 1): [47620, 1],
    (47629, 1): [47619, 1],
    (47639, 1): [47632, 1],
    (47653, 1): [47640, 1],
    (47657, 1): [47654, 1],
    (47659, 1): [47657, 1],
    (47681, 1): [47678, 1],
    (47699, 1): [47697, 1],
    (47701, 1): [47699, 1],
    (47711, 1): [47700, 1],
    (47713, 1): [47703, 1],
    (47717, 1): [47715, 1],
    (47737, 1): [47732, 1],
    (47741, 1): [47738, 1],
    (47743, 1): [47740, 1],
    (47777, 1): [47774, 1],
    (47779, 1): [47776, 1],
    (47791, 1): [47784, 1],
    (47797, 1): [47792, 1],
    (47807, 1): [47802, 1],
    (47809, 1): [47802, 1],
    (47819, 1): [47817, 1],
    (47837, 1): [47835, 1],
    (47843, 1): [47841, 1],
    (47857, 1): [47850, 1],
    (47869, 1): [47867, 1],
    (47881, 1): [47852, 1],
    (47903, 1): [47896, 1],
    (47911, 1): [47908, 1],
    (47917, 1): [47912, 1],
    (47933, 1): [47931, 1],
    (47939, 1): [47937, 1],
    (47947, 1): [47945, 1],
    (47951, 1): [47944, 1],
    (47963, 1): [47961, 1],
    (47969, 1): [47966, 1],
    (47977, 1): [47970, 1],
    (47981, 1): [47979, 1],
    (48017, 1): [48014, 1],
    (48023, 1): [48018, 1],
    (48029, 1): [48027, 1],
    (48049, 1): [48032, 1],
    (48073, 1): [48068, 1],
    (48079, 1): [48073, 1],
    (48091, 1): [48084, 1],
    (48109, 1): [48107, 1],
    (48119, 1): [48112, 1],
    (48121, 1): [48108, 1],
    (48131, 1): [48125, 1],
    (48157, 1): [48152, 1],
    (48163, 1): [48160, 1],
    (48179, 1): [48173, 1],
    (48187, 1): [48185, 1],
    (48193, 1): [48186, 1],
    (48197, 1): [48195, 1],
    (48221, 1): [48219, 1],
    (48239, 1): [48232, 1],
    (48247, 1): [48244, 1],
    (48259, 1): [48257, 1],
    (48271, 1): [48265, 1],
    (48281, 1): [48278, 1],
    (48299, 1): [48297, 1],
    (48311, 1): [48304, 1],
    (48313, 1): [48308, 1],
    (48337, 1): [48327, 1],
    (48341, 1): [48338, 1],
    (48353, 1): [48350, 1],
    (48371, 1): [48369, 1],
    (48383, 1): [48378, 1],
    (48397, 1): [48392, 1],
    (48407, 1): [48402, 1],
    (48409, 1): [48392, 1],
    (48413, 1): [48411, 1],
    (48437, 1): [48435, 1],
    (48449, 1): [48446, 1],
    (48463, 1): [48458, 1],
    (48473, 1): [48470, 1],
    (48479, 1): [48472, 1],
    (48481, 1): [48464, 1],
    (48487, 1): [48482, 1],
    (48491, 1): [48489, 1],
    (48497, 1): [48494, 1],
    (48523, 1): [48520, 1],
    (48527, 1): [48522, 1],
    (48533, 1): [48531, 1],
    (48539, 1): [48537, 1],
    (48541, 1): [48539, 1],
    (48563, 1): [48561, 1],
    (48571, 1): [48569, 1],
    (48589, 1): [48579, 1],
    (48593, 1): [48590, 1],
    (48611, 1): [48609, 1],
    (48619, 1): [48617, 1],
    (48623, 1): [48618, 1],
    (48647, 1): [48642, 1],
    (48649, 1): [48642, 1],
    (48661, 1): [48659, 1],
    (48673, 1): [48658, 1],
    (48677, 1): [48675, 1],
    (48679, 1): [48676, 1],
    (48731, 1): [48725, 1],
    (48733, 1): [48731, 1],
    (48751, 1): [48748, 1],
    (48757, 1): [48755, 1],
    (48761, 1): [48758, 1],
    (48767, 1): [48762, 1],
    (48779, 1): [48777, 1],
    (48781, 1): [48775, 1],
    (48787, 1): [48785, 1],
    (48799, 1): [48796, 1],
    (48809, 1): [48806, 1],
    (48817, 1): [48812, 1],
    (48821, 1): [48819, 1],
    (48823, 1): [48818, 1],
    (48847, 1): [48844, 1],
    (48857, 1): [48854, 1],
    (48859, 1): [48857, 1],
    (48869, 1): [48867, 1],
    (48871, 1): [48868, 1],
    (48883, 1): [48881, 1],
    (48889, 1): [48855, 1],
    (48907, 1): [48905, 1],
    (48947, 1): [48945, 1],
    (48953, 1): [48950, 1],
    (48973, 1): [48968, 1],
    (48989, 1): [48987, 1],
    (48991, 1): [48985, 1],
    (49003, 1): [48990, 1],
    (49009, 1): [48990, 1],
    (49019, 1): [49017, 1],
    (49031, 1): [49018, 1],
    (49033, 1): [49023, 1],
    (49037, 1): [49035, 1],
    (49043, 1): [49041, 1],
    (49057, 1): [49052, 1],
    (49069, 1): [49067, 1],
    (49081, 1): [49070, 1],
    (49103, 1): [49098, 1],
    (49109, 1): [49107, 1],
    (49117, 1): [49115, 1],
    (49121, 1): [49118, 1],
    (49123, 1): [49121, 1],
    (49139, 1): [49137, 1],
    (49157, 1): [49155, 1],
    (49169, 1): [49166, 1],
    (49171, 1): [49169, 1],
    (49177, 1): [49172, 1],
    (49193, 1): [49190, 1],
    (49199, 1): [49186, 1],
    (49201, 1): [49194, 1],
    (49207, 1): [49204, 1],
    (49211, 1): [49209, 1],
    (49223, 1): [49218, 1],
    (49253, 1): [49251, 1],
    (49261, 1): [49259, 1],
    (49277, 1): [49275, 1],
    (49279, 1): [49276, 1],
    (49297, 1): [49292, 1],
    (49307, 1): [49305, 1],
    (49331, 1): [49329, 1],
    (49333, 1): [49331, 1],
    (49339, 1): [49328, 1],
    (49363, 1): [49361, 1],
    (49367, 1): [49362, 1],
    (49369, 1): [49356, 1],
    (49391, 1): [49380, 1],
    (49393, 1): [49388, 1],
    (49409, 1): [49406, 1],
    (49411, 1): [49409, 1],
    (49417, 1): [49412, 1],
    (49429, 1): [49427, 1],
    (49433, 1): [49430, 1],
    (49451, 1): [49441, 1],
    (49459, 1): [49456, 1],
    (49463, 1): [49458, 1],
    (49477, 1): [49466, 1],
    (49481, 1): [49478, 1],
    (49499, 1): [49497, 1],
    (49523, 1): [49521, 1],
    (49529, 1): [49526, 1],
    (49531, 1): [49521, 1],
    (49537, 1): [49527, 1],
    (49547, 1): [49545, 1],
    (49549, 1): [49543, 1],
    (49559, 1): [49548, 1],
    (49597, 1): [49592, 1],
    (49603, 1): [49600, 1],
    (49613, 1): [49611, 1],
    (49627, 1): [49624, 1],
    (49633, 1): [49628, 1],
    (49639, 1): [49636, 1],
    (49663, 1): [49660, 1],
    (49667, 1): [49665, 1],
    (49669, 1): [49667, 1],
    (49681, 1): [49664, 1],
    (49697, 1): [49694, 1],
    (49711, 1): [49704, 1],
    (49727, 1): [49722, 1],
    (49739, 1): [49737, 1],
    (49741, 1): [49739, 1],
    (49747, 1): [49744, 1],
    (49757, 1): [49755, 1],
    (49783, 1): [49780, 1],
    (49787, 1): [49785, 1],
    (49789, 1): [49783, 1],
    (49801, 1): [49788, 1],
    (49807, 1): [49804, 1],
    (49811, 1): [49805, 1],
    (49823, 1): [49818, 1],
    (49831, 1): [49819, 1],
    (49843, 1): [49841, 1],
    (49853, 1): [49851, 1],
    (49871, 1): [49854, 1],
    (49877, 1): [49875, 1],
    (49891, 1): [49889, 1],
    (49919, 1): [49912, 1],
    (49921, 1): [49898, 1],
    (49927, 1): [49924, 1],
    (49937, 1): [49934, 1],
    (49939, 1): [49932, 1],
    (49943, 1): [49938, 1],
    (49957, 1): [49952, 1],
    (49991, 1): [49984, 1],
    (49993, 1): [49988, 1],
    (49999, 1): [49996, 1],
    (50021, 1): [50019, 1],
    (50023, 1): [50020, 1],
    (50033, 1): [50028, 1],
    (50047, 1): [50041, 1],
    (50051, 1): [50049, 1],
    (50053, 1): [50051, 1],
    (50069, 1): [50067, 1],
    (50077, 1): [50075, 1],
    (50087, 1): [50082, 1],
    (50093, 1): [50091, 1],
    (50101, 1): [50099, 1],
    (50111, 1): [50094, 1],
    (50119, 1): [50116, 1],
    (50123, 1): [50121, 1],
    (50129, 1): [50126, 1],
    (50131, 1): [50129, 1],
    (50147, 1): [50145, 1],
    (50153, 1): [50150, 1],
    (50159, 1): [50152, 1],
    (50177, 1): [50174, 1],
    (50207, 1): [50202, 1],
    (50221, 1): [50208, 1],
    (50227, 1): [50225, 1],
    (50231, 1): [50220, 1],
    (50261, 1): [50258, 1],
    (50263, 1): [50260, 1],
    (50273, 1): [50270, 1],
    (50287, 1): [50284, 1],
    (50291, 1): [50289, 1],
    (50311, 1): [50308, 1],
    (50321, 1): [50315, 1],
    (50329, 1): [50322, 1],
    (50333, 1): [50331, 1],
    (50341, 1): [50339, 1],
    (50359, 1): [50356, 1],
    (50363, 1): [50361, 1],
    (50377, 1): [50372, 1],
    (50383, 1): [50380, 1],
    (50387, 1): [50385, 1],
    (50411, 1): [50409, 1],
    (50417, 1): [50414, 1],
    (50423, 1): [50418, 1],
    (50441, 1): [50435, 1],
    (50459, 1): [50457, 1],
    (50461, 1): [50454, 1],
    (50497, 1): [50492, 1],
    (50503, 1): [50498, 1],
    (50513, 1): [50510, 1],
    (50527, 1): [50524, 1],
    (50539, 1): [50537, 1],
    (50543, 1): [50538, 1],
    (50549, 1): [50547, 1],
    (50551, 1): [50548, 1],
    (50581, 1): [50579, 1],
    (50587, 1): [50573, 1],
    (50591, 1): [50584, 1],
    (50593, 1): [50588, 1],
    (50599, 1): [50596, 1],
    (50627, 1): [50625, 1],
    (50647, 1): [50644, 1],
    (50651, 1): [50649, 1],
    (50671, 1): [50660, 1],
    (50683, 1): [50681, 1],
    (50707, 1): [50704, 1],
    (50723, 1): [50721, 1],
    (50741, 1): [50739, 1],
    (50753, 1): [50750, 1],
    (50767, 1): [50762, 1],
    (50773, 1): [50762, 1],
    (50777, 1): [50774, 1],
    (50789, 1): [50787, 1],
    (50821, 1): [50819, 1],
    (50833, 1): [50826, 1],
    (50839, 1): [50836, 1],
    (50849, 1): [50846, 1],
    (50857, 1): [50838, 1],
    (50867, 1): [50865, 1],
    (50873, 1): [50870, 1],
    (50891, 1): [50889, 1],
    (50893, 1): [50891, 1],
    (50909, 1): [50907, 1],
    (50923, 1): [50921, 1],
    (50929, 1): [50918, 1],
    (50951, 1): [50928, 1],
    (50957, 1): [50955, 1],
    (50969, 1): [50966, 1],
    (50971, 1): [50969, 1],
    (50989, 1): [50987, 1],
    (50993, 1): [50990, 1],
    (51001, 1): [50994, 1],
    (51031, 1): [51028, 1],
    (51043, 1): [51041, 1],
    (51047, 1): [51042, 1],
    (51059, 1): [51057, 1],
    (51061, 1): [51059, 1],
    (51071, 1): [51060, 1],
    (51109, 1): [51099, 1],
    (51131, 1): [51125, 1],
    (51133, 1): [51131, 1],
    (51137, 1): [51134, 1],
    (51151, 1): [51148, 1],
    (51157, 1): [51152, 1],
    (51169, 1): [51155, 1],
    (51193, 1): [51188, 1],
    (51197, 1): [51195, 1],
    (51199, 1): [51187, 1],
    (51203, 1): [51201, 1],
    (51217, 1): [51212, 1],
    (51229, 1): [51227, 1],
    (51239, 1): [51216, 1],
    (51241, 1): [51224, 1],
    (51257, 1): [51254, 1],
    (51263, 1): [51258, 1],
    (51283, 1): [51281, 1],
    (51287, 1): [51282, 1],
    (51307, 1): [51302, 1],
    (51329, 1): [51326, 1],
    (51341, 1): [51339, 1],
    (51343, 1): [51338, 1],
    (51347, 1): [51345, 1],
    (51349, 1): [51339, 1],
    (51361, 1): [51324, 1],
    (51383, 1): [51378, 1],
    (51407, 1): [51402, 1],
    (51413, 1): [51411, 1],
    (51419, 1): [51417, 1],
    (51421, 1): [51419, 1],
    (51427, 1): [51425, 1],
    (51431, 1): [51424, 1],
    (51437, 1): [51435, 1],
    (51439, 1): [51436, 1],
    (51449, 1): [51446, 1],
    (51461, 1): [51459, 1],
    (51473, 1): [51470, 1],
    (51479, 1): [51472, 1],
    (51481, 1): [51464, 1],
    (51487, 1): [51484, 1],
    (51503, 1): [51498, 1],
    (51511, 1): [51505, 1],
    (51517, 1): [51511, 1],
    (51521, 1): [51518, 1],
    (51539, 1): [51537, 1],
    (51551, 1): [51540, 1],
    (51563, 1): [51561, 1],
    (51577, 1): [51567, 1],
    (51581, 1): [51579, 1],
    (51593, 1): [51590, 1],
    (51599, 1): [51592, 1],
    (51607, 1): [51604, 1],
    (51613, 1): [51611, 1],
    (51631, 1): [51616, 1],
    (51637, 1): [51632, 1],
    (51647, 1): [51640, 1],
    (51659, 1): [51657, 1],
    (51673, 1): [51666, 1],
    (51679, 1): [51673, 1],
    (51683, 1): [51681, 1],
    (51691, 1): [51681, 1],
    (51713, 1): [51710, 1],
    (51719, 1): [51706, 1],
    (51721, 1): [51714, 1],
    (51749, 1): [51747, 1],
    (51767, 1): [51762, 1],
    (51769, 1): [51750, 1],
    (51787, 1): [51784, 1],
    (51797, 1): [51794, 1],
    (51803, 1): [51801, 1],
    (51817, 1): [51807, 1],
    (51827, 1): [51825, 1],
    (51829, 1): [51827, 1],
    (51839, 1): [51832, 1],
    (51853, 1): [51842, 1],
    (51859, 1): [51856, 1],
    (51869, 1): [51867, 1],
    (51871, 1): [51864, 1],
    (51893, 1): [51891, 1],
    (51899, 1): [51897, 1],
    (51907, 1): [51896, 1],
    (51913, 1): [51903, 1],
    (51929, 1): [51926, 1],
    (51941, 1): [51938, 1],
    (51949, 1): [51947, 1],
    (51971, 1): [51969, 1],
    (51973, 1): [51971, 1],
    (51977, 1): [51974, 1],
    (51991, 1): [51984, 1],
    (52009, 1): [51992, 1],
    (52021, 1): [52019, 1],
    (52027, 1): [52025, 1],
    (52051, 1): [52049, 1],
    (52057, 1): [52050, 1],
    (52067, 1): [52065, 1],
    (52069, 1): [52067, 1],
    (52081, 1): [52064, 1],
    (52103, 1): [52098, 1],
    (52121, 1): [52118, 1],
    (52127, 1): [52122, 1],
    (52147, 1): [52145, 1],
    (52153, 1): [52148, 1],
    (52163, 1): [52161, 1],
    (52177, 1): [52172, 1],
    (52181, 1): [52178, 1],
    (52183, 1): [52180, 1],
    (52189, 1): [52176, 1],
    (52201, 1): [52184, 1],
    (52223, 1): [52218, 1],
    (52237, 1): [52231, 1],
    (52249, 1): [52236, 1],
    (52253, 1): [52251, 1],
    (52259, 1): [52257, 1],
    (52267, 1): [52265, 1],
    (52289, 1): [52286, 1],
    (52291, 1): [52284, 1],
    (52301, 1): [52299, 1],
    (52313, 1): [52310, 1],
    (52321, 1): [52304, 1],
    (52361, 1): [52355, 1],
    (52363, 1): [52358, 1],
    (52369, 1): [52356, 1],
    (52379, 1): [52377, 1],
    (52387, 1): [52385, 1],
    (52391, 1): [52380, 1],
    (52433, 1): [52430, 1],
    (52453, 1): [52451, 1],
    (52457, 1): [52454, 1],
    (52489, 1): [52482, 1],
    (52501, 1): [52491, 1],
    (52511, 1): [52504, 1],
    (52517, 1): [52515, 1],
    (52529, 1): [52526, 1],
    (52541, 1): [52539, 1],
    (52543, 1): [52540, 1],
    (52553, 1): [52550, 1],
    (52561, 1): [52554, 1],
    (52567, 1): [52564, 1],
    (52571, 1): [52569, 1],
    (52579, 1): [52577, 1],
    (52583, 1): [52578, 1],
    (52609, 1): [52598, 1],
    (52627, 1): [52624, 1],
    (52631, 1): [52618, 1],
    (52639, 1): [52636, 1],
    (52667, 1): [52665, 1],
    (52673, 1): [52670, 1],
    (52691, 1): [52689, 1],
    (52697, 1): [52694, 1],
    (52709, 1): [52707, 1],
    (52711, 1): [52688, 1],
    (52721, 1): [52718, 1],
    (52727, 1): [52722, 1],
    (52733, 1): [52731, 1],
    (52747, 1): [52744, 1],
    (52757, 1): [52755, 1],
    (52769, 1): [52766, 1],
    (52783, 1): [52778, 1],
    (52807, 1): [52802, 1],
    (52813, 1): [52811, 1],
    (52817, 1): [52814, 1],
    (52837, 1): [52835, 1],
    (52859, 1): [52853, 1],
    (52861, 1): [52850, 1],
    (52879, 1): [52876, 1],
    (52883, 1): [52881, 1],
    (52889, 1): [52886, 1],
    (52901, 1): [52898, 1],
    (52903, 1): [52900, 1],
    (52919, 1): [52908, 1],
    (52937, 1): [52932, 1],
    (52951, 1): [52948, 1],
    (52957, 1): [52952, 1],
    (52963, 1): [52960, 1],
    (52967, 1): [52962, 1],
    (52973, 1): [52971, 1],
    (52981, 1): [52979, 1],
    (52999, 1): [52996, 1],
    (53003, 1): [53001, 1],
    (53017, 1): [53012, 1],
    (53047, 1): [53044, 1],
    (53051, 1): [53045, 1],
    (53069, 1): [53067, 1],
    (53077, 1): [53075, 1],
    (53087, 1): [53082, 1],
    (53089, 1): [53058, 1],
    (53093, 1): [53091, 1],
    (53101, 1): [53099, 1],
    (53113, 1): [53108, 1],
    (53117, 1): [53115, 1],
    (53129, 1): [53126, 1],
    (53147, 1): [53145, 1],
    (53149, 1): [53143, 1],
    (53161, 1): [53147, 1],
    (53171, 1): [53169, 1],
    (53173, 1): [53155, 1],
    (53189, 1): [53187, 1],
    (53197, 1): [53195, 1],
    (53201, 1): [53198, 1],
    (53231, 1): [53208, 1],
    (53233, 1): [53228, 1],
    (53239, 1): [53236, 1],
    (53267, 1): [53265, 1],
    (53269, 1): [53262, 1],
    (53279, 1): [53272, 1],
    (53281, 1): [53270, 1],
    (53299, 1): [53297, 1],
    (53309, 1): [53307, 1],
    (53323, 1): [53321, 1],
    (53327, 1): [53322, 1],
    (53353, 1): [53346, 1],
    (53359, 1): [53356, 1],
    (53377, 1): [53372, 1],
    (53381, 1): [53379, 1],
    (53401, 1): [53394, 1],
    (53407, 1): [53402, 1],
    (53411, 1): [53409, 1],
    (53419, 1): [53417, 1],
    (53437, 1): [53435, 1],
    (53441, 1): [53438, 1],
    (53453, 1): [53451, 1],
    (53479, 1): [53476, 1],
    (53503, 1): [53500, 1],
    (53507, 1): [53505, 1],
    (53527, 1): [53524, 1],
    (53549, 1): [53547, 1],
    (53551, 1): [53548, 1],
    (53569, 1): [53550, 1],
    (53591, 1): [53578, 1],
    (53593, 1): [53588, 1],
    (53597, 1): [53595, 1],
    (53609, 1): [53606, 1],
    (53611, 1): [53601, 1],
    (53617, 1): [53612, 1],
    (53623, 1): [53620, 1],
    (53629, 1): [53623, 1],
    (53633, 1): [53630, 1],
    (53639, 1): [53628, 1],
    (53653, 1): [53651, 1],
    (53657, 1): [53654, 1],
    (53681, 1): [53678, 1],
    (53693, 1): [53691, 1],
    (53699, 1): [53697, 1],
    (53717, 1): [53715, 1],
    (53719, 1): [53713, 1],
    (53731, 1): [53719, 1],
    (53759, 1): [53742, 1],
    (53773, 1): [53771, 1],
    (53777, 1): [53774, 1],
    (53783, 1): [53778, 1],
    (53791, 1): [53785, 1],
    (53813, 1): [53811, 1],
    (53819, 1): [53817, 1],
    (53831, 1): [53824, 1],
    (53849, 1): [53846, 1],
    (53857, 1): [53852, 1],
    (53861, 1): [53859, 1],
    (53881, 1): [53850, 1],
    (53887, 1): [53884, 1],
    (53891, 1): [53889, 1],
    (53897, 1): [53894, 1],
    (53899, 1): [53897, 1],
    (53917, 1): [53915, 1],
    (53923, 1): [53918, 1],
    (53927, 1): [53922, 1],
    (53939, 1): [53937, 1],
    (53951, 1): [53944, 1],
    (53959, 1): [53956, 1],
    (53987, 1): [53985, 1],
    (53993, 1): [53990, 1],
    (54001, 1): [53990, 1],
    (54011, 1): [54009, 1],
    (54013, 1): [54008, 1],
    (54037, 1): [54035, 1],
    (54049, 1): [54038, 1],
    (54059, 1): [54057, 1],
    (54083, 1): [54081, 1],
    (54091, 1): [54088, 1],
    (54101, 1): [54098, 1],
    (54121, 1): [54108, 1],
    (54133, 1): [54128, 1],
    (54139, 1): [54137, 1],
    (54151, 1): [54145, 1],
    (54163, 1): [54161, 1],
    (54167, 1): [54162, 1],
    (54181, 1): [54179, 1],
    (54193, 1): [54183, 1],
    (54217, 1): [54212, 1],
    (54251, 1): [54249, 1],
    (54269, 1): [54267, 1],
    (54277, 1): [54272, 1],
    (54287, 1): [54282, 1],
    (54293, 1): [54291, 1],
    (54311, 1): [54300, 1],
    (54319, 1): [54316, 1],
    (54323, 1): [54321, 1],
    (54331, 1): [54329, 1],
    (54347, 1): [54345, 1],
    (54361, 1): [54354, 1],
    (54367, 1): [54362, 1],
    (54371, 1): [54365, 1],
    (54377, 1): [54372, 1],
    (54401, 1): [54398, 1],
    (54403, 1): [54401, 1],
    (54409, 1): [54402, 1],
    (54413, 1): [54411, 1],
    (54419, 1): [54417, 1],
    (54421, 1): [54419, 1],
    (54437, 1): [54435, 1],
    (54443, 1): [54441, 1],
    (54449, 1): [54446, 1],
    (54469, 1): [54467, 1],
    (54493, 1): [54491, 1],
    (54497, 1): [54494, 1],
    (54499, 1): [54496, 1],
    (54503, 1): [54496, 1],
    (54517, 1): [54512, 1],
    (54521, 1): [54518, 1],
    (54539, 1): [54537, 1],
    (54541, 1): [54539, 1],
    (54547, 1): [54544, 1],
    (54559, 1): [54556, 1],
    (54563, 1): [54561, 1],
    (54577, 1): [54572, 1],
    (54581, 1): [54571, 1],
    (54583, 1): [54578, 1],
    (54601, 1): [54579, 1],
    (54617, 1): [54614, 1],
    (54623, 1): [54618, 1],
    (54629, 1): [54626, 1],
    (54631, 1): [54625, 1],
    (54647, 1): [54642, 1],
    (54667, 1): [54665, 1],
    (54673, 1): [54668, 1],
    (54679, 1): [54672, 1],
    (54709, 1): [54707, 1],
    (54713, 1): [54708, 1],
    (54721, 1): [54710, 1],
    (54727, 1): [54724, 1],
    (54751, 1): [54745, 1],
    (54767, 1): [54762, 1],
    (54773, 1): [54771, 1],
    (54779, 1): [54777, 1],
    (54787, 1): [54785, 1],
    (54799, 1): [54796, 1],
    (54829, 1): [54827, 1],
    (54833, 1): [54830, 1],
    (54851, 1): [54845, 1],
    (54869, 1): [54867, 1],
    (54877, 1): [54875, 1],
    (54881, 1): [54878, 1],
    (54907, 1): [54905, 1],
    (54917, 1): [54915, 1],
    (54919, 1): [54916, 1],
    (54941, 1): [54939, 1],
    (54949, 1): [54947, 1],
    (54959, 1): [54952, 1],
    (54973, 1): [54959, 1],
    (54979, 1): [54976, 1],
    (54983, 1): [54978, 1],
    (55001, 1): [54998, 1],
    (55009, 1): [55002, 1],
    (55021, 1): [55015, 1],
    (55049, 1): [55043, 1],
    (55051, 1): [55049, 1],
    (55057, 1): [55047, 1],
    (55061, 1): [55059, 1],
    (55073, 1): [55070, 1],
    (55079, 1): [55066, 1],
    (55103, 1): [55098, 1],
    (55109, 1): [55107, 1],
    (55117, 1): [55112, 1],
    (55127, 1): [55122, 1],
    (55147, 1): [55142, 1],
    (55163, 1): [55161, 1],
    (55171, 1): [55161, 1],
    (55201, 1): [55194, 1],
    (55207, 1): [55202, 1],
    (55213, 1): [55211, 1],
    (55217, 1): [55214, 1],
    (55219, 1): [55217, 1],
    (55229, 1): [55227, 1],
    (55243, 1): [55241, 1],
    (55249, 1): [55238, 1],
    (55259, 1): [55253, 1],
    (55291, 1): [55280, 1],
    (55313, 1): [55310, 1],
    (55331, 1): [55329, 1],
    (55333, 1): [55327, 1],
    (55337, 1): [55334, 1],
    (55339, 1): [55337, 1],
    (55343, 1): [55336, 1],
    (55351, 1): [55344, 1],
    (55373, 1): [55371, 1],
    (55381, 1): [55375, 1],
    (55399, 1): [55393, 1],
    (55411, 1): [55409, 1],
    (55439, 1): [55426, 1],
    (55441, 1): [55403, 1],
    (55457, 1): [55454, 1],
    (55469, 1): [55467, 1],
    (55487, 1): [55482, 1],
    (55501, 1): [55495, 1],
    (55511, 1): [55500, 1],
    (55529, 1): [55526, 1],
    (55541, 1): [55539, 1],
    (55547, 1): [55545, 1],
    (55579, 1): [55577, 1],
    (55589, 1): [55587, 1],
    (55603, 1): [55601, 1],
    (55609, 1): [55596, 1],
    (55619, 1): [55617, 1],
    (55621, 1): [55619, 1],
    (55631, 1): [55624, 1],
    (55633, 1): [55628, 1],
    (55639, 1): [55636, 1],
    (55661, 1): [55659, 1],
    (55663, 1): [55660, 1],
    (55667, 1): [55665, 1],
    (55673, 1): [55670, 1],
    (55681, 1): [55670, 1],
    (55691, 1): [55689, 1],
    (55697, 1): [55694, 1],
    (55711, 1): [55708, 1],
    (55717, 1): [55715, 1],
    (55721, 1): [55718, 1],
    (55733, 1): [55731, 1],
    (55763, 1): [55761, 1],
    (55787, 1): [55785, 1],
    (55793, 1): [55790, 1],
    (55799, 1): [55792, 1],
    (55807, 1): [55804, 1],
    (55813, 1): [55811, 1],
    (55817, 1): [55814, 1],
    (55819, 1): [55817, 1],
    (55823, 1): [55818, 1],
    (55829, 1): [55827, 1],
    (55837, 1): [55832, 1],
    (55843, 1): [55841, 1],
    (55849, 1): [55835, 1],
    (55871, 1): [55864, 1],
    (55889, 1): [55886, 1],
    (55897, 1): [55892, 1],
    (55901, 1): [55899, 1],
    (55903, 1): [55892, 1],
    (55921, 1): [55900, 1],
    (55927, 1): [55924, 1],
    (55931, 1): [55925, 1],
    (55933, 1): [55931, 1],
    (55949, 1): [55947, 1],
    (55967, 1): [55962, 1],
    (55987, 1): [55985, 1],
    (55997, 1): [55995, 1],
    (56003, 1): [56001, 1],
    (56009, 1): [56006, 1],
    (56039, 1): [56032, 1],
    (56041, 1): [56034, 1],
    (56053, 1): [56051, 1],
    (56081, 1): [56078, 1],
    (56087, 1): [56082, 1],
    (56093, 1): [56091, 1],
    (56099, 1): [56097, 1],
    (56101, 1): [56094, 1],
    (56113, 1): [56108, 1],
    (56123, 1): [56121, 1],
    (56131, 1): [56129, 1],
    (56149, 1): [56143, 1],
    (56167, 1): [56164, 1],
    (56171, 1): [56169, 1],
    (56179, 1): [56176, 1],
    (56197, 1): [56184, 1],
    (56207, 1): [56202, 1],
    (56209, 1): [56202, 1],
    (56237, 1): [56235, 1],
    (56239, 1): [56236, 1],
    (56249, 1): [56246, 1],
    (56263, 1): [56260, 1],
    (56267, 1): [56265, 1],
    (56269, 1): [56267, 1],
    (56299, 1): [56289, 1],
    (56311, 1): [56305, 1],
    (56333, 1): [56331, 1],
    (56359, 1): [56356, 1],
    (56369, 1): [56366, 1],
    (56377, 1): [56372, 1],
    (56383, 1): [56380, 1],
    (56393, 1): [56390, 1],
    (56401, 1): [56388, 1],
    (56417, 1): [56414, 1],
    (56431, 1): [56428, 1],
    (56437, 1): [56435, 1],
    (56443, 1): [56438, 1],
    (56453, 1): [56451, 1],
    (56467, 1): [56465, 1],
    (56473, 1): [56468, 1],
    (56477, 1): [56475, 1],
    (56479, 1): [56473, 1],
    (56489, 1): [56486, 1],
    (56501, 1): [56498, 1],
    (56503, 1): [56500, 1],
    (56509, 1): [56507, 1],
    (56519, 1): [56506, 1],
    (56527, 1): [56524, 1],
    (56531, 1): [56529, 1],
    (56533, 1): [56528, 1],
    (56543, 1): [56538, 1],
    (56569, 1): [56558, 1],
    (56591, 1): [56572, 1],
    (56597, 1): [56595, 1],
    (56599, 1): [56596, 1],
    (56611, 1): [56585, 1],
    (56629, 1): [56627, 1],
    (56633, 1): [56630, 1],
    (56659, 1): [56657, 1],
    (56663, 1): [56658, 1],
    (56671, 1): [56668, 1],
    (56681, 1): [56678, 1],
    (56687, 1): [56682, 1],
    (56701, 1): [56699, 1],
    (56711, 1): [56704, 1],
    (56713, 1): [56708, 1],
    (56731, 1): [56729, 1],
    (56737, 1): [56727, 1],
    (56747, 1): [56745, 1],
    (56767, 1): [56764, 1],
    (56773, 1): [56771, 1],
    (56779, 1): [56777, 1],
    (56783, 1): [56778, 1],
    (56807, 1): [56802, 1],
    (56809, 1): [56792, 1],
    (56813, 1): [56810, 1],
    (56821, 1): [56815, 1],
    (56827, 1): [56825, 1],
    (56843, 1): [56841, 1],
    (56857, 1): [56850, 1],
    (56873, 1): [56870, 1],
    (56891, 1): [56889, 1],
    (56893, 1): [56891, 1],
    (56897, 1): [56892, 1],
    (56909, 1): [56907, 1],
    (56911, 1): [56908, 1],
    (56921, 1): [56918, 1],
    (56923, 1): [56920, 1],
    (56929, 1): [56915, 1],
    (56941, 1): [56939, 1],
    (56951, 1): [56938, 1],
    (56957, 1): [56955, 1],
    (56963, 1): [56961, 1],
    (56983, 1): [56980, 1],
    (56989, 1): [56983, 1],
    (56993, 1): [56990, 1],
    (56999, 1): [56986, 1],
    (57037, 1): [57032, 1],
    (57041, 1): [57030, 1],
    (57047, 1): [57040, 1],
    (57059, 1): [57057, 1],
    (57073, 1): [57068, 1],
    (57077, 1): [57075, 1],
    (57089, 1): [57086, 1],
    (57097, 1): [57090, 1],
    (57107, 1): [57105, 1],
    (57119, 1): [57100, 1],
    (57131, 1): [57129, 1],
    (57139, 1): [57137, 1],
    (57143, 1): [57138, 1],
    (57149, 1): [57147, 1],
    (57163, 1): [57161, 1],
    (57173, 1): [57171, 1],
    (57179, 1): [57177, 1],
    (57191, 1): [57184, 1],
    (57193, 1): [57188, 1],
    (57203, 1): [57201, 1],
    (57221, 1): [57219, 1],
    (57223, 1): [57220, 1],
    (57241, 1): [57230, 1],
    (57251, 1): [57249, 1],
    (57259, 1): [57257, 1],
    (57269, 1): [57267, 1],
    (57271, 1): [57268, 1],
    (57283, 1): [57281, 1],
    (57287, 1): [57282, 1],
    (57301, 1): [57295, 1],
    (57329, 1): [57326, 1],
    (57331, 1): [57329, 1],
    (57347, 1): [57345, 1],
    (57349, 1): [57347, 1],
    (57367, 1): [57364, 1],
    (57373, 1): [57371, 1],
    (57383, 1): [57378, 1],
    (57389, 1): [57387, 1],
    (57397, 1): [57395, 1],
    (57413, 1): [57411, 1],
    (57427, 1): [57425, 1],
    (57457, 1): [57452, 1],
    (57467, 1): [57465, 1],
    (57487, 1): [57481, 1],
    (57493, 1): [57488, 1],
    (57503, 1): [57498, 1],
    (57527, 1): [57522, 1],
    (57529, 1): [57522, 1],
    (57557, 1): [57555, 1],
    (57559, 1): [57553, 1],
    (57571, 1): [57558, 1],
    (57587, 1): [57585, 1],
    (57593, 1): [57590, 1],
    (57601, 1): [57594, 1],
    (57637, 1): [57635, 1],
    (57641, 1): [57638, 1],
    (57649, 1): [57636, 1],
    (57653, 1): [57651, 1],
    (57667, 1): [57664, 1],
    (57679, 1): [57676, 1],
    (57689, 1): [57686, 1],
    (57697, 1): [57692, 1],
    (57709, 1): [57707, 1],
    (57713, 1): [57710, 1],
    (57719, 1): [57712, 1],
    (57727, 1): [57724, 1],
    (57731, 1): [57729, 1],
    (57737, 1): [57734, 1],
    (57751, 1): [57745, 1],
    (57773, 1): [57770, 1],
    (57781, 1): [57775, 1],
    (57787, 1): [57785, 1],
    (57791, 1): [57765, 1],
    (57793, 1): [57788, 1],
    (57803, 1): [57801, 1],
    (57809, 1): [57806, 1],
    (57829, 1): [57819, 1],
    (57839, 1): [57828, 1],
    (57847, 1): [57844, 1],
    (57853, 1): [57848, 1],
    (57859, 1): [57857, 1],
    (57881, 1): [57878, 1],
    (57899, 1): [57897, 1],
    (57901, 1): [57899, 1],
    (57917, 1): [57915, 1],
    (57923, 1): [57921, 1],
    (57943, 1): [57938, 1],
    (57947, 1): [57942, 1],
    (57973, 1): [57968, 1],
    (57977, 1): [57974, 1],
    (57991, 1): [57985, 1],
    (58013, 1): [58011, 1],
    (58027, 1): [58025, 1],
    (58031, 1): [58024, 1],
    (58043, 1): [58041, 1],
    (58049, 1): [58046, 1],
    (58057, 1): [58050, 1],
    (58061, 1): [58058, 1],
    (58067, 1): [58065, 1],
    (58073, 1): [58068, 1],
    (58099, 1): [58089, 1],
    (58109, 1): [58107, 1],
    (58111, 1): [58099, 1],
    (58129, 1): [58116, 1],
    (58147, 1): [58144, 1],
    (58151, 1): [58144, 1],
    (58153, 1): [58143, 1],
    (58169, 1): [58163, 1],
    (58171, 1): [58169, 1],
    (58189, 1): [58183, 1],
    (58193, 1): [58190, 1],
    (58199, 1): [58192, 1],
    (58207, 1): [58202, 1],
    (58211, 1): [58209, 1],
    (58217, 1): [58214, 1],
    (58229, 1): [58227, 1],
    (58231, 1): [58225, 1],
    (58237, 1): [58222, 1],
    (58243, 1): [58241, 1],
    (58271, 1): [58260, 1],
    (58309, 1): [58303, 1],
    (58313, 1): [58310, 1],
    (58321, 1): [58310, 1],
    (58337, 1): [58334, 1],
    (58363, 1): [58361, 1],
    (58367, 1): [58360, 1],
    (58369, 1): [58362, 1],
    (58379, 1): [58377, 1],
    (58391, 1): [58380, 1],
    (58393, 1): [58388, 1],
    (58403, 1): [58401, 1],
    (58411, 1): [58409, 1],
    (58417, 1): [58412, 1],
    (58427, 1): [58425, 1],
    (58439, 1): [58422, 1],
    (58441, 1): [58428, 1],
    (58451, 1): [58441, 1],
    (58453, 1): [58451, 1],
    (58477, 1): [58472, 1],
    (58481, 1): [58475, 1],
    (58511, 1): [58498, 1],
    (58537, 1): [58530, 1],
    (58543, 1): [58537, 1],
    (58549, 1): [58547, 1],
    (58567, 1): [58561, 1],
    (58573, 1): [58571, 1],
    (58579, 1): [58577, 1],
    (58601, 1): [58598, 1],
    (58603, 1): [58601, 1],
    (58613, 1): [58611, 1],
    (58631, 1): [58612, 1],
    (58657, 1): [58652, 1],
    (58661, 1): [58659, 1],
    (58679, 1): [58668, 1],
    (58687, 1): [58681, 1],
    (58693, 1): [58691, 1],
    (58699, 1): [58697, 1],
    (58711, 1): [58705, 1],
    (58727, 1): [58722, 1],
    (58733, 1): [58731, 1],
    (58741, 1): [58739, 1],
    (58757, 1): [58755, 1],
    (58763, 1): [58761, 1],
    (58771, 1): [58760, 1],
    (58787, 1): [58785, 1],
    (58789, 1): [58787, 1],
    (58831, 1): [58820, 1],
    (58889, 1): [58886, 1],
    (58897, 1): [58892, 1],
    (58901, 1): [58899, 1],
    (58907, 1): [58905, 1],
    (58909, 1): [58907, 1],
    (58913, 1): [58910, 1],
    (58921, 1): [58908, 1],
    (58937, 1): [58934, 1],
    (58943, 1): [58938, 1],
    (58963, 1): [58960, 1],
    (58967, 1): [58962, 1],
    (58979, 1): [58977, 1],
    (58991, 1): [58984, 1],
    (58997, 1): [58994, 1],
    (59009, 1): [59006, 1],
    (59011, 1): [59009, 1],
    (59021, 1): [59019, 1],
    (59023, 1): [59018, 1],
    (59029, 1): [59027, 1],
    (59051, 1): [59041, 1],
    (59053, 1): [59038, 1],
    (59063, 1): [59058, 1],
    (59069, 1): [59067, 1],
    (59077, 1): [59072, 1],
    (59083, 1): [59081, 1],
    (59093, 1): [59090, 1],
    (59107, 1): [59105, 1],
    (59113, 1): [59106, 1],
    (59119, 1): [59116, 1],
    (59123, 1): [59121, 1],
    (59141, 1): [59138, 1],
    (59149, 1): [59147, 1],
    (59159, 1): [59152, 1],
    (59167, 1): [59164, 1],
    (59183, 1): [59178, 1],
    (59197, 1): [59195, 1],
    (59207, 1): [59202, 1],
    (59209, 1): [59198, 1],
    (59219, 1): [59217, 1],
    (59221, 1): [59219, 1],
    (59233, 1): [59228, 1],
    (59239, 1): [59236, 1],
    (59243, 1): [59241, 1],
    (59263, 1): [59260, 1],
    (59273, 1): [59270, 1],
    (59281, 1): [59274, 1],
    (59333, 1): [59331, 1],
    (59341, 1): [59327, 1],
    (59351, 1): [59338, 1],
    (59357, 1): [59355, 1],
    (59359, 1): [59353, 1],
    (59369, 1): [59366, 1],
    (59377, 1): [59372, 1],
    (59387, 1): [59385, 1],
    (59393, 1): [59388, 1],
    (59399, 1): [59392, 1],
    (59407, 1): [59404, 1],
    (59417, 1): [59414, 1],
    (59419, 1): [59417, 1],
    (59441, 1): [59438, 1],
    (59443, 1): [59441, 1],
    (59447, 1): [59442, 1],
    (59453, 1): [59451, 1],
    (59467, 1): [59465, 1],
    (59471, 1): [59460, 1],
    (59473, 1): [59463, 1],
    (59497, 1): [59482, 1],
    (59509, 1): [59499, 1],
    (59513, 1): [59510, 1],
    (59539, 1): [59537, 1],
    (59557, 1): [59555, 1],
    (59561, 1): [59558, 1],
    (59567, 1): [59562, 1],
    (59581, 1): [59575, 1],
    (59611, 1): [59609, 1],
    (59617, 1): [59610, 1],
    (59621, 1): [59618, 1],
    (59627, 1): [59625, 1],
    (59629, 1): [59627, 1],
    (59651, 1): [59649, 1],
    (59659, 1): [59656, 1],
    (59663, 1): [59658, 1],
    (59669, 1): [59667, 1],
    (59671, 1): [59659, 1],
    (59693, 1): [59691, 1],
    (59699, 1): [59697, 1],
    (59707, 1): [59704, 1],
    (59723, 1): [59721, 1],
    (59729, 1): [59726, 1],
    (59743, 1): [59740, 1],
    (59747, 1): [59745, 1],
    (59753, 1): [59748, 1],
    (59771, 1): [59769, 1],
    (59779, 1): [59769, 1],
    (59791, 1): [59788, 1],
    (59797, 1): [59795, 1],
    (59809, 1): [59792, 1],
    (59833, 1): [59828, 1],
    (59863, 1): [59858, 1],
    (59879, 1): [59865, 1],
    (59887, 1): [59884, 1],
    (59921, 1): [59918, 1],
    (59929, 1): [59910, 1],
    (59951, 1): [59940, 1],
    (59957, 1): [59955, 1],
    (59971, 1): [59968, 1],
    (59981, 1): [59979, 1],
    (59999, 1): [59992, 1],
    (60013, 1): [60007, 1],
    (60017, 1): [60014, 1],
    (60029, 1): [60027, 1],
    (60037, 1): [60035, 1],
    (60041, 1): [60038, 1],
    (60077, 1): [60075, 1],
    (60083, 1): [60081, 1],
    (60089, 1): [60086, 1],
    (60091, 1): [60089, 1],
    (60101, 1): [60098, 1],
    (60103, 1): [60098, 1],
    (60107, 1): [60105, 1],
    (60127, 1): [60124, 1],
    (60133, 1): [60127, 1],
    (60139, 1): [60136, 1],
    (60149, 1): [60147, 1],
    (60161, 1): [60158, 1],
    (60167, 1): [60162, 1],
    (60169, 1): [60158, 1],
    (60209, 1): [60206, 1],
    (60217, 1): [60212, 1],
    (60223, 1): [60220, 1],
    (60251, 1): [60245, 1],
    (60257, 1): [60254, 1],
    (60259, 1): [60256, 1],
    (60271, 1): [60268, 1],
    (60289, 1): [60282, 1],
    (60293, 1): [60291, 1],
    (60317, 1): [60315, 1],
    (60331, 1): [60319, 1],
    (60337, 1): [60332, 1],
    (60343, 1): [60340, 1],
    (60353, 1): [60350, 1],
    (60373, 1): [60371, 1],
    (60383, 1): [60378, 1],
    (60397, 1): [60392, 1],
    (60413, 1): [60411, 1],
    (60427, 1): [60424, 1],
    (60443, 1): [60441, 1],
    (60449, 1): [60446, 1],
    (60457, 1): [60444, 1],
    (60493, 1): [60491, 1],
    (60497, 1): [60494, 1],
    (60509, 1): [60507, 1],
    (60521, 1): [60518, 1],
    (60527, 1): [60522, 1],
    (60539, 1): [60537, 1],
    (60589, 1): [60587, 1],
    (60601, 1): [60590, 1],
    (60607, 1): [60604, 1],
    (60611, 1): [60601, 1],
    (60617, 1): [60614, 1],
    (60623, 1): [60618, 1],
    (60631, 1): [60625, 1],
    (60637, 1): [60635, 1],
    (60647, 1): [60642, 1],
    (60649, 1): [60638, 1],
    (60659, 1): [60657, 1],
    (60661, 1): [60659, 1],
    (60679, 1): [60676, 1],
    (60689, 1): [60686, 1],
    (60703, 1): [60700, 1],
    (60719, 1): [60712, 1],
    (60727, 1): [60722, 1],
    (60733, 1): [60731, 1],
    (60737, 1): [60734, 1],
    (60757, 1): [60755, 1],
    (60761, 1): [60755, 1],
    (60763, 1): [60760, 1],
    (60773, 1): [60771, 1],
    (60779, 1): [60777, 1],
    (60793, 1): [60788, 1],
    (60811, 1): [60809, 1],
    (60821, 1): [60819, 1],
    (60859, 1): [60856, 1],
    (60869, 1): [60867, 1],
    (60887, 1): [60880, 1],
    (60889, 1): [60868, 1],
    (60899, 1): [60897, 1],
    (60901, 1): [60899, 1],
    (60913, 1): [60908, 1],
    (60917, 1): [60915, 1],
    (60919, 1): [60916, 1],
    (60923, 1): [60921, 1],
    (60937, 1): [60927, 1],
    (60943, 1): [60938, 1],
    (60953, 1): [60950, 1],
    (60961, 1): [60954, 1],
    (61001, 1): [60998, 1],
    (61007, 1): [61002, 1],
    (61027, 1): [61025, 1],
    (61031, 1): [61009, 1],
    (61043, 1): [61041, 1],
    (61051, 1): [61048, 1],
    (61057, 1): [61052, 1],
    (61091, 1): [61089, 1],
    (61099, 1): [61097, 1],
    (61121, 1): [61118, 1],
    (61129, 1): [61122, 1],
    (61141, 1): [61135, 1],
    (61151, 1): [61120, 1],
    (61153, 1): [61143, 1],
    (61169, 1): [61166, 1],
    (61211, 1): [61209, 1],
    (61223, 1): [61218, 1],
    (61231, 1): [61224, 1],
    (61253, 1): [61251, 1],
    (61261, 1): [61259, 1],
    (61283, 1): [61281, 1],
    (61291, 1): [61288, 1],
    (61297, 1): [61290, 1],
    (61331, 1): [61329, 1],
    (61333, 1): [61331, 1],
    (61339, 1): [61337, 1],
    (61343, 1): [61338, 1],
    (61357, 1): [61351, 1],
    (61363, 1): [61360, 1],
    (61379, 1): [61377, 1],
    (61381, 1): [61375, 1],
    (61403, 1): [61401, 1],
    (61409, 1): [61406, 1],
    (61417, 1): [61412, 1],
    (61441, 1): [61424, 1],
    (61463, 1): [61458, 1],
    (61469, 1): [61467, 1],
    (61471, 1): [61468, 1],
    (61483, 1): [61481, 1],
    (61487, 1): [61482, 1],
    (61493, 1): [61491, 1],
    (61507, 1): [61505, 1],
    (61511, 1): [61504, 1],
    (61519, 1): [61516, 1],
    (61543, 1): [61540, 1],
    (61547, 1): [61545, 1],
    (61553, 1): [61550, 1],
    (61559, 1): [61552, 1],
    (61561, 1): [61554, 1],
    (61583, 1): [61578, 1],
    (61603, 1): [61601, 1],
    (61609, 1): [61596, 1],
    (61613, 1): [61611, 1],
    (61627, 1): [61624, 1],
    (61631, 1): [61620, 1],
    (61637, 1): [61635, 1],
    (61643, 1): [61641, 1],
    (61651, 1): [61649, 1],
    (61657, 1): [61652, 1],
    (61667, 1): [61665, 1],
    (61673, 1): [61668, 1],
    (61681, 1): [61652, 1],
    (61687, 1): [61681, 1],
    (61703, 1): [61698, 1],
    (61717, 1): [61715, 1],
    (61723, 1): [61718, 1],
    (61729, 1): [61722, 1],
    (61751, 1): [61744, 1],
    (61757, 1): [61755, 1],
    (61781, 1): [61779, 1],
    (61813, 1): [61811, 1],
    (61819, 1): [61816, 1],
    (61837, 1): [61831, 1],
    (61843, 1): [61841, 1],
    (61861, 1): [61859, 1],
    (61871, 1): [61852, 1],
    (61879, 1): [61876, 1],
    (61909, 1): [61903, 1],
    (61927, 1): [61924, 1],
    (61933, 1): [61928, 1],
    (61949, 1): [61947, 1],
    (61961, 1): [61958, 1],
    (61967, 1): [61962, 1],
    (61979, 1): [61977, 1],
    (61981, 1): [61974, 1],
    (61987, 1): [61985, 1],
    (61991, 1): [61978, 1],
    (62003, 1): [62001, 1],
    (62011, 1): [62009, 1],
    (62017, 1): [62007, 1],
    (62039, 1): [62022, 1],
    (62047, 1): [62044, 1],
    (62053, 1): [62051, 1],
    (62057, 1): [62054, 1],
    (62071, 1): [62064, 1],
    (62081, 1): [62075, 1],
    (62099, 1): [62097, 1],
    (62119, 1): [62112, 1],
    (62129, 1): [62126, 1],
    (62131, 1): [62129, 1],
    (62137, 1): [62130, 1],
    (62141, 1): [62139, 1],
    (62143, 1): [62140, 1],
    (62171, 1): [62169, 1],
    (62189, 1): [62187, 1],
    (62191, 1): [62188, 1],
    (62201, 1): [62198, 1],
    (62207, 1): [62202, 1],
    (62213, 1): [62211, 1],
    (62219, 1): [62217, 1],
    (62233, 1): [62226, 1],
    (62273, 1): [62270, 1],
    (62297, 1): [62294, 1],
    (62299, 1): [62297, 1],
    (62303, 1): [62298, 1],
    (62311, 1): [62305, 1],
    (62323, 1): [62321, 1],
    (62327, 1): [62322, 1],
    (62347, 1): [62344, 1],
    (62351, 1): [62344, 1],
    (62383, 1): [62378, 1],
    (62401, 1): [62384, 1],
    (62417, 1): [62414, 1],
    (62423, 1): [62418, 1],
    (62459, 1): [62453, 1],
    (62467, 1): [62464, 1],
    (62473, 1): [62468, 1],
    (62477, 1): [62475, 1],
    (62483, 1): [62481, 1],
    (62497, 1): [62487, 1],
    (62501, 1): [62499, 1],
    (62507, 1): [62505, 1],
    (62533, 1): [62531, 1],
    (62539, 1): [62537, 1],
    (62549, 1): [62547, 1],
    (62563, 1): [62560, 1],
    (62581, 1): [62579, 1],
    (62591, 1): [62584, 1],
    (62597, 1): [62595, 1],
    (62603, 1): [62601, 1],
    (62617, 1): [62612, 1],
    (62627, 1): [62625, 1],
    (62633, 1): [62630, 1],
    (62639, 1): [62628, 1],
    (62653, 1): [62651, 1],
    (62659, 1): [62656, 1],
    (62683, 1): [62680, 1],
    (62687, 1): [62682, 1],
    (62701, 1): [62699, 1],
    (62723, 1): [62721, 1],
    (62731, 1): [62721, 1],
    (62743, 1): [62736, 1],
    (62753, 1): [62750, 1],
    (62761, 1): [62754, 1],
    (62773, 1): [62768, 1],
    (62791, 1): [62788, 1],
    (62801, 1): [62798, 1],
    (62819, 1): [62817, 1],
    (62827, 1): [62824, 1],
    (62851, 1): [62849, 1],
    (62861, 1): [62858, 1],
    (62869, 1): [62867, 1],
    (62873, 1): [62870, 1],
    (62897, 1): [62894, 1],
    (62903, 1): [62898, 1],
    (62921, 1): [62907, 1],
    (62927, 1): [62922, 1],
    (62929, 1): [62915, 1],
    (62939, 1): [62937, 1],
    (62969, 1): [62966, 1],
    (62971, 1): [62961, 1],
    (62981, 1): [62979, 1],
    (62983, 1): [62978, 1],
    (62987, 1): [62985, 1],
    (62989, 1): [62987, 1],
    (63029, 1): [63027, 1],
    (63031, 1): [63028, 1],
    (63059, 1): [63057, 1],
    (63067, 1): [63065, 1],
    (63073, 1): [63068, 1],
    (63079, 1): [63076, 1],
    (63097, 1): [63092, 1],
    (63103, 1): [63100, 1],
    (63113, 1): [63110, 1],
    (63127, 1): [63124, 1],
    (63131, 1): [63129, 1],
    (63149, 1): [63147, 1],
    (63179, 1): [63177, 1],
    (63197, 1): [63195, 1],
    (63199, 1): [63196, 1],
    (63211, 1): [63204, 1],
    (63241, 1): [63234, 1],
    (63247, 1): [63242, 1],
    (63277, 1): [63275, 1],
    (63281, 1): [63275, 1],
    (63299, 1): [63297, 1],
    (63311, 1): [63294, 1],
    (63313, 1): [63308, 1],
    (63317, 1): [63315, 1],
    (63331, 1): [63329, 1],
    (63337, 1): [63332, 1],
    (63347, 1): [63345, 1],
    (63353, 1): [63350, 1],
    (63361, 1): [63324, 1],
    (63367, 1): [63364, 1],
    (63377, 1): [63374, 1],
    (63389, 1): [63387, 1],
    (63391, 1): [63388, 1],
    (63397, 1): [63395, 1],
    (63409, 1): [63402, 1],
    (63419, 1): [63417, 1],
    (63421, 1): [63419, 1],
    (63439, 1): [63436, 1],
    (63443, 1): [63441, 1],
    (63463, 1): [63458, 1],
    (63467, 1): [63465, 1],
    (63473, 1): [63470, 1],
    (63487, 1): [63484, 1],
    (63493, 1): [63491, 1],
    (63499, 1): [63496, 1],
    (63521, 1): [63518, 1],
    (63527, 1): [63522, 1],
    (63533, 1): [63530, 1],
    (63541, 1): [63539, 1],
    (63559, 1): [63556, 1],
    (63577, 1): [63572, 1],
    (63587, 1): [63585, 1],
    (63589, 1): [63587, 1],
    (63599, 1): [63592, 1],
    (63601, 1): [63594, 1],
    (63607, 1): [63604, 1],
    (63611, 1): [63609, 1],
    (63617, 1): [63614, 1],
    (63629, 1): [63627, 1],
    (63647, 1): [63642, 1],
    (63649, 1): [63642, 1],
    (63659, 1): [63657, 1],
    (63667, 1): [63665, 1],
    (63671, 1): [63660, 1],
    (63689, 1): [63686, 1],
    (63691, 1): [63676, 1],
    (63697, 1): [63692, 1],
    (63703, 1): [63700, 1],
    (63709, 1): [63703, 1],
    (63719, 1): [63706, 1],
    (63727, 1): [63721, 1],
    (63737, 1): [63734, 1],
    (63743, 1): [63738, 1],
    (63761, 1): [63758, 1],
    (63773, 1): [63771, 1],
    (63781, 1): [63779, 1],
    (63793, 1): [63788, 1],
    (63799, 1): [63793, 1],
    (63803, 1): [63801, 1],
    (63809, 1): [63806, 1],
    (63823, 1): [63820, 1],
    (63839, 1): [63810, 1],
    (63841, 1): [63824, 1],
    (63853, 1): [63851, 1],
    (63857, 1): [63854, 1],
    (63863, 1): [63858, 1],
    (63901, 1): [63894, 1],
    (63907, 1): [63905, 1],
    (63913, 1): [63900, 1],
    (63929, 1): [63926, 1],
    (63949, 1): [63947, 1],
    (63977, 1): [63974, 1],
    (63997, 1): [63995, 1],
    (64007, 1): [64002, 1],
    (64013, 1): [64011, 1],
    (64019, 1): [64017, 1],
    (64033, 1): [64028, 1],
    (64037, 1): [64035, 1],
    (64063, 1): [64060, 1],
    (64067, 1): [64062, 1],
    (64081, 1): [64070, 1],
    (64091, 1): [64089, 1],
    (64109, 1): [64107, 1],
    (64123, 1): [64121, 1],
    (64151, 1): [64134, 1],
    (64153, 1): [64148, 1],
    (64157, 1): [64155, 1],
    (64171, 1): [64164, 1],
    (64187, 1): [64185, 1],
    (64189, 1): [64187, 1],
    (64217, 1): [64214, 1],
    (64223, 1): [64218, 1],
    (64231, 1): [64219, 1],
    (64237, 1): [64235, 1],
    (64271, 1): [64264, 1],
    (64279, 1): [64250, 1],
    (64283, 1): [64281, 1],
    (64301, 1): [64299, 1],
    (64303, 1): [64297, 1],
    (64319, 1): [64306, 1],
    (64327, 1): [64324, 1],
    (64333, 1): [64331, 1],
    (64373, 1): [64371, 1],
    (64381, 1): [64379, 1],
    (64399, 1): [64396, 1],
    (64403, 1): [64398, 1],
    (64433, 1): [64430, 1],
    (64439, 1): [64432, 1],
    (64451, 1): [64449, 1],
    (64453, 1): [64451, 1],
    (64483, 1): [64481, 1],
    (64489, 1): [64482, 1],
    (64499, 1): [64497, 1],
    (64513, 1): [64508, 1],
    (64553, 1): [64550, 1],
    (64567, 1): [64564, 1],
    (64577, 1): [64574, 1],
    (64579, 1): [64577, 1],
    (64591, 1): [64588, 1],
    (64601, 1): [64598, 1],
    (64609, 1): [64574, 1],
    (64613, 1): [64611, 1],
    (64621, 1): [64615, 1],
    (64627, 1): [64622, 1],
    (64633, 1): [64628, 1],
    (64661, 1): [64659, 1],
    (64663, 1): [64657, 1],
    (64667, 1): [64665, 1],
    (64679, 1): [64662, 1],
    (64693, 1): [64691, 1],
    (64709, 1): [64706, 1],
    (64717, 1): [64715, 1],
    (64747, 1): [64742, 1],
    (64763, 1): [64761, 1],
    (64781, 1): [64779, 1],
    (64783, 1): [64778, 1],
    (64793, 1): [64790, 1],
    (64811, 1): [64809, 1],
    (64817, 1): [64814, 1],
    (64849, 1): [64836, 1],
    (64853, 1): [64851, 1],
    (64871, 1): [64864, 1],
    (64877, 1): [64874, 1],
    (64879, 1): [64873, 1],
    (64891, 1): [64881, 1],
    (64901, 1): [64899, 1],
    (64919, 1): [64912, 1],
    (64921, 1): [64914, 1],
    (64927, 1): [64924, 1],
    (64937, 1): [64934, 1],
    (64951, 1): [64948, 1],
    (64969, 1): [64956, 1],
    (64997, 1): [64995, 1],
    (65003, 1): [64998, 1],
    (65011, 1): [65009, 1],
    (65027, 1): [65025, 1],
    (65029, 1): [65027, 1],
    (65033, 1): [65030, 1],
    (65053, 1): [65048, 1],
    (65063, 1): [65058, 1],
    (65071, 1): [65068, 1],
    (65089, 1): [65082, 1],
    (65099, 1): [65097, 1],
    (65101, 1): [65099, 1],
    (65111, 1): [65104, 1],
    (65119, 1): [65116, 1],
    (65123, 1): [65121, 1],
    (65129, 1): [65126, 1],
    (65141, 1): [65139, 1],
    (65147, 1): [65145, 1],
    (65167, 1): [65162, 1],
    (65171, 1): [65169, 1],
    (65173, 1): [65171, 1],
    (65179, 1): [65177, 1],
    (65183, 1): [65178, 1],
    (65203, 1): [65201, 1],
    (65213, 1): [65211, 1],
    (65239, 1): [65236, 1],
    (65257, 1): [65252, 1],
    (65267, 1): [65265, 1],
    (65269, 1): [65267, 1],
    (65287, 1): [65284, 1],
    (65293, 1): [65291, 1],
    (65309, 1): [65307, 1],
    (65323, 1): [65321, 1],
    (65327, 1): [65322, 1],
    (65353, 1): [65348, 1],
    (65357, 1): [65355, 1],
    (65371, 1): [65369, 1],
    (65381, 1): [65378, 1],
    (65393, 1): [65390, 1],
    (65407, 1): [65404, 1],
    (65413, 1): [65408, 1],
    (65419, 1): [65416, 1],
    (65423, 1): [65418, 1],
    (65437, 1): [65431, 1],
    (65447, 1): [65442, 1],
    (65449, 1): [65438, 1],
    (65479, 1): [65472, 1],
    (65497, 1): [65490, 1],
    (65519, 1): [65508, 1],
    (65521, 1): [65504, 1],
}
