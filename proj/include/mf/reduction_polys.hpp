#pragma once
// Pinned reduction polynomials: for each prime power p^k (k >= 2) up to the
// implementation cap of 2^24 elements, the lexicographically smallest monic
// irreducible polynomial of degree k over GF(p). A polynomial sum(c_i x^i) is
// encoded as the integer sum(c_i p^i) (little-endian base-p digits). Pinning
// one polynomial per field makes every element index, generator choice, and
// downstream sequence reproducible bit for bit across runs and platforms.

#include <cstdint>

namespace mf {

struct ReductionPolyEntry {
  std::int64_t p;
  int k;
  std::uint64_t enc;
};

inline constexpr ReductionPolyEntry kReductionPolys[] = {
    {2, 2, 7ull},
    {2, 3, 11ull},
    {2, 4, 19ull},
    {2, 5, 37ull},
    {2, 6, 67ull},
    {2, 7, 131ull},
    {2, 8, 283ull},
    {2, 9, 515ull},
    {2, 10, 1033ull},
    {2, 11, 2053ull},
    {2, 12, 4105ull},
    {2, 13, 8219ull},
    {2, 14, 16417ull},
    {2, 15, 32771ull},
    {2, 16, 65579ull},
    {2, 17, 131081ull},
    {2, 18, 262153ull},
    {2, 19, 524327ull},
    {2, 20, 1048585ull},
    {2, 21, 2097157ull},
    {2, 22, 4194307ull},
    {2, 23, 8388641ull},
    {2, 24, 16777243ull},
    {3, 2, 10ull},
    {3, 3, 34ull},
    {3, 4, 86ull},
    {3, 5, 250ull},
    {3, 6, 734ull},
    {3, 7, 2198ull},
    {3, 8, 6572ull},
    {3, 9, 19747ull},
    {3, 10, 59068ull},
    {3, 11, 177158ull},
    {3, 12, 531452ull},
    {3, 13, 1594330ull},
    {3, 14, 4782974ull},
    {3, 15, 14348918ull},
    {5, 2, 27ull},
    {5, 3, 131ull},
    {5, 4, 627ull},
    {5, 5, 3146ull},
    {5, 6, 15632ull},
    {5, 7, 78131ull},
    {5, 8, 390627ull},
    {5, 9, 1953163ull},
    {5, 10, 9765658ull},
    {7, 2, 50ull},
    {7, 3, 345ull},
    {7, 4, 2409ull},
    {7, 5, 16817ull},
    {7, 6, 117651ull},
    {7, 7, 823586ull},
    {7, 8, 5764811ull},
    {11, 2, 122ull},
    {11, 3, 1346ull},
    {11, 4, 14654ull},
    {11, 5, 161053ull},
    {11, 6, 1771574ull},
    {13, 2, 171ull},
    {13, 3, 2199ull},
    {13, 4, 28563ull},
    {13, 5, 371347ull},
    {13, 6, 4826811ull},
    {17, 2, 292ull},
    {17, 3, 4933ull},
    {17, 4, 83524ull},
    {17, 5, 1419877ull},
    {19, 2, 362ull},
    {19, 3, 6861ull},
    {19, 4, 130348ull},
    {19, 5, 2476121ull},
    {23, 2, 530ull},
    {23, 3, 12193ull},
    {23, 4, 279866ull},
    {23, 5, 6436369ull},
    {29, 2, 843ull},
    {29, 3, 24422ull},
    {29, 4, 707283ull},
    {31, 2, 962ull},
    {31, 3, 29794ull},
    {31, 4, 923553ull},
    {37, 2, 1371ull},
    {37, 3, 50655ull},
    {37, 4, 1874163ull},
    {41, 2, 1684ull},
    {41, 3, 68963ull},
    {41, 4, 2825764ull},
    {43, 2, 1850ull},
    {43, 3, 79510ull},
    {43, 4, 3418847ull},
    {47, 2, 2210ull},
    {47, 3, 103874ull},
    {47, 4, 4879733ull},
    {53, 2, 2811ull},
    {53, 3, 148935ull},
    {53, 4, 7890483ull},
    {59, 2, 3482ull},
    {59, 3, 205439ull},
    {59, 4, 12117421ull},
    {61, 2, 3723ull},
    {61, 3, 226983ull},
    {61, 4, 13845843ull},
    {67, 2, 4490ull},
    {67, 3, 300765ull},
    {71, 2, 5042ull},
    {71, 3, 357983ull},
    {73, 2, 5334ull},
    {73, 3, 389019ull},
    {79, 2, 6242ull},
    {79, 3, 493041ull},
    {83, 2, 6890ull},
    {83, 3, 571875ull},
    {89, 2, 7924ull},
    {89, 3, 705062ull},
    {97, 2, 9414ull},
    {97, 3, 912675ull},
    {101, 2, 10203ull},
    {101, 3, 1030403ull},
    {103, 2, 10610ull},
    {103, 3, 1092729ull},
    {107, 2, 11450ull},
    {107, 3, 1225151ull},
    {109, 2, 11883ull},
    {109, 3, 1295032ull},
    {113, 2, 12772ull},
    {113, 3, 1443011ull},
    {127, 2, 16130ull},
    {127, 3, 2048386ull},
    {131, 2, 17162ull},
    {131, 3, 2248225ull},
    {137, 2, 18772ull},
    {137, 3, 2571494ull},
    {139, 2, 19322ull},
    {139, 3, 2685621ull},
    {149, 2, 22203ull},
    {149, 3, 3308104ull},
    {151, 2, 22802ull},
    {151, 3, 3442953ull},
    {157, 2, 24651ull},
    {157, 3, 3869896ull},
    {163, 2, 26570ull},
    {163, 3, 4330749ull},
    {167, 2, 27890ull},
    {167, 3, 4657633ull},
    {173, 2, 29931ull},
    {173, 3, 5177895ull},
    {179, 2, 32042ull},
    {179, 3, 5735522ull},
    {181, 2, 32763ull},
    {181, 3, 5929743ull},
    {191, 2, 36482ull},
    {191, 3, 6968063ull},
    {193, 2, 37254ull},
    {193, 3, 7189059ull},
    {197, 2, 38811ull},
    {197, 3, 7645574ull},
    {199, 2, 39602ull},
    {199, 3, 7880601ull},
    {211, 2, 44522ull},
    {211, 3, 9393933ull},
    {223, 2, 49730ull},
    {223, 3, 11089570ull},
    {227, 2, 51530ull},
    {227, 3, 11697316ull},
    {229, 2, 52443ull},
    {229, 3, 12008992ull},
    {233, 2, 54292ull},
    {233, 3, 12649571ull},
    {239, 2, 57122ull},
    {239, 3, 13652169ull},
    {241, 2, 58088ull},
    {241, 3, 13997523ull},
    {251, 2, 63002ull},
    {251, 3, 15813506ull},
    {257, 2, 66052ull},
    {263, 2, 69170ull},
    {269, 2, 72363ull},
    {271, 2, 73442ull},
    {277, 2, 76731ull},
    {281, 2, 78964ull},
    {283, 2, 80090ull},
    {293, 2, 85851ull},
    {307, 2, 94250ull},
    {311, 2, 96722ull},
    {313, 2, 97974ull},
    {317, 2, 100491ull},
    {331, 2, 109562ull},
    {337, 2, 113574ull},
    {347, 2, 120410ull},
    {349, 2, 121803ull},
    {353, 2, 124612ull},
    {359, 2, 128882ull},
    {367, 2, 134690ull},
    {373, 2, 139131ull},
    {379, 2, 143642ull},
    {383, 2, 146690ull},
    {389, 2, 151323ull},
    {397, 2, 157611ull},
    {401, 2, 160804ull},
    {409, 2, 167288ull},
    {419, 2, 175562ull},
    {421, 2, 177243ull},
    {431, 2, 185762ull},
    {433, 2, 187494ull},
    {439, 2, 192722ull},
    {443, 2, 196250ull},
    {449, 2, 201604ull},
    {457, 2, 208854ull},
    {461, 2, 212523ull},
    {463, 2, 214370ull},
    {467, 2, 218090ull},
    {479, 2, 229442ull},
    {487, 2, 237170ull},
    {491, 2, 241082ull},
    {499, 2, 249002ull},
    {503, 2, 253010ull},
    {509, 2, 259083ull},
    {521, 2, 271444ull},
    {523, 2, 273530ull},
    {541, 2, 292683ull},
    {547, 2, 299210ull},
    {557, 2, 310251ull},
    {563, 2, 316970ull},
    {569, 2, 323764ull},
    {571, 2, 326042ull},
    {577, 2, 332934ull},
    {587, 2, 344570ull},
    {593, 2, 351652ull},
    {599, 2, 358802ull},
    {601, 2, 361208ull},
    {607, 2, 368450ull},
    {613, 2, 375771ull},
    {617, 2, 380692ull},
    {619, 2, 383162ull},
    {631, 2, 398162ull},
    {641, 2, 410884ull},
    {643, 2, 413450ull},
    {647, 2, 418610ull},
    {653, 2, 426411ull},
    {659, 2, 434282ull},
    {661, 2, 436923ull},
    {673, 2, 452934ull},
    {677, 2, 458331ull},
    {683, 2, 466490ull},
    {691, 2, 477482ull},
    {701, 2, 491403ull},
    {709, 2, 502683ull},
    {719, 2, 516962ull},
    {727, 2, 528530ull},
    {733, 2, 537291ull},
    {739, 2, 546122ull},
    {743, 2, 552050ull},
    {751, 2, 564002ull},
    {757, 2, 573051ull},
    {761, 2, 579124ull},
    {769, 2, 591368ull},
    {773, 2, 597531ull},
    {787, 2, 619370ull},
    {797, 2, 635211ull},
    {809, 2, 654484ull},
    {811, 2, 657722ull},
    {821, 2, 674043ull},
    {823, 2, 677330ull},
    {827, 2, 683930ull},
    {829, 2, 687243ull},
    {839, 2, 703922ull},
    {853, 2, 727611ull},
    {857, 2, 734452ull},
    {859, 2, 737882ull},
    {863, 2, 744770ull},
    {877, 2, 769131ull},
    {881, 2, 776164ull},
    {883, 2, 779690ull},
    {887, 2, 786770ull},
    {907, 2, 822650ull},
    {911, 2, 829922ull},
    {919, 2, 844562ull},
    {929, 2, 863044ull},
    {937, 2, 877974ull},
    {941, 2, 885483ull},
    {947, 2, 896810ull},
    {953, 2, 908212ull},
    {967, 2, 935090ull},
    {971, 2, 942842ull},
    {977, 2, 954532ull},
    {983, 2, 966290ull},
    {991, 2, 982082ull},
    {997, 2, 994011ull},
    {1009, 2, 1018092ull},
    {1013, 2, 1026171ull},
    {1019, 2, 1038362ull},
    {1021, 2, 1042443ull},
    {1031, 2, 1062962ull},
    {1033, 2, 1067094ull},
    {1039, 2, 1079522ull},
    {1049, 2, 1100404ull},
    {1051, 2, 1104602ull},
    {1061, 2, 1125723ull},
    {1063, 2, 1129970ull},
    {1069, 2, 1142763ull},
    {1087, 2, 1181570ull},
    {1091, 2, 1190282ull},
    {1093, 2, 1194651ull},
    {1097, 2, 1203412ull},
    {1103, 2, 1216610ull},
    {1109, 2, 1229883ull},
    {1117, 2, 1247691ull},
    {1123, 2, 1261130ull},
    {1129, 2, 1274652ull},
    {1151, 2, 1324802ull},
    {1153, 2, 1329414ull},
    {1163, 2, 1352570ull},
    {1171, 2, 1371242ull},
    {1181, 2, 1394763ull},
    {1187, 2, 1408970ull},
    {1193, 2, 1423252ull},
    {1201, 2, 1442412ull},
    {1213, 2, 1471371ull},
    {1217, 2, 1481092ull},
    {1223, 2, 1495730ull},
    {1229, 2, 1510443ull},
    {1231, 2, 1515362ull},
    {1237, 2, 1530171ull},
    {1249, 2, 1560008ull},
    {1259, 2, 1585082ull},
    {1277, 2, 1630731ull},
    {1279, 2, 1635842ull},
    {1283, 2, 1646090ull},
    {1289, 2, 1661524ull},
    {1291, 2, 1666682ull},
    {1297, 2, 1682214ull},
    {1301, 2, 1692603ull},
    {1303, 2, 1697810ull},
    {1307, 2, 1708250ull},
    {1319, 2, 1739762ull},
    {1321, 2, 1745048ull},
    {1327, 2, 1760930ull},
    {1361, 2, 1852324ull},
    {1367, 2, 1868690ull},
    {1373, 2, 1885131ull},
    {1381, 2, 1907163ull},
    {1399, 2, 1957202ull},
    {1409, 2, 1985284ull},
    {1423, 2, 2024930ull},
    {1427, 2, 2036330ull},
    {1429, 2, 2042043ull},
    {1433, 2, 2053492ull},
    {1439, 2, 2070722ull},
    {1447, 2, 2093810ull},
    {1451, 2, 2105402ull},
    {1453, 2, 2111211ull},
    {1459, 2, 2128682ull},
    {1471, 2, 2163842ull},
    {1481, 2, 2193364ull},
    {1483, 2, 2199290ull},
    {1487, 2, 2211170ull},
    {1489, 2, 2217128ull},
    {1493, 2, 2229051ull},
    {1499, 2, 2247002ull},
    {1511, 2, 2283122ull},
    {1523, 2, 2319530ull},
    {1531, 2, 2343962ull},
    {1543, 2, 2380850ull},
    {1549, 2, 2399403ull},
    {1553, 2, 2411812ull},
    {1559, 2, 2430482ull},
    {1567, 2, 2455490ull},
    {1571, 2, 2468042ull},
    {1579, 2, 2493242ull},
    {1583, 2, 2505890ull},
    {1597, 2, 2550411ull},
    {1601, 2, 2563204ull},
    {1607, 2, 2582450ull},
    {1609, 2, 2588888ull},
    {1613, 2, 2601771ull},
    {1619, 2, 2621162ull},
    {1621, 2, 2627643ull},
    {1627, 2, 2647130ull},
    {1637, 2, 2679771ull},
    {1657, 2, 2745654ull},
    {1663, 2, 2765570ull},
    {1667, 2, 2778890ull},
    {1669, 2, 2785563ull},
    {1693, 2, 2866251ull},
    {1697, 2, 2879812ull},
    {1699, 2, 2886602ull},
    {1709, 2, 2920683ull},
    {1721, 2, 2961844ull},
    {1723, 2, 2968730ull},
    {1733, 2, 3003291ull},
    {1741, 2, 3031083ull},
    {1747, 2, 3052010ull},
    {1753, 2, 3073014ull},
    {1759, 2, 3094082ull},
    {1777, 2, 3157734ull},
    {1783, 2, 3179090ull},
    {1787, 2, 3193370ull},
    {1789, 2, 3200523ull},
    {1801, 2, 3243612ull},
    {1811, 2, 3279722ull},
    {1823, 2, 3323330ull},
    {1831, 2, 3352562ull},
    {1847, 2, 3411410ull},
    {1861, 2, 3463323ull},
    {1867, 2, 3485690ull},
    {1871, 2, 3500642ull},
    {1873, 2, 3508134ull},
    {1877, 2, 3523131ull},
    {1879, 2, 3530642ull},
    {1889, 2, 3568324ull},
    {1901, 2, 3613803ull},
    {1907, 2, 3636650ull},
    {1913, 2, 3659572ull},
    {1931, 2, 3728762ull},
    {1933, 2, 3736491ull},
    {1949, 2, 3798603ull},
    {1951, 2, 3806402ull},
    {1973, 2, 3892731ull},
    {1979, 2, 3916442ull},
    {1987, 2, 3948170ull},
    {1993, 2, 3972054ull},
    {1997, 2, 3988011ull},
    {1999, 2, 3996002ull},
    {2003, 2, 4012010ull},
    {2011, 2, 4044122ull},
    {2017, 2, 4068294ull},
    {2027, 2, 4108730ull},
    {2029, 2, 4116843ull},
    {2039, 2, 4157522ull},
    {2053, 2, 4214811ull},
    {2063, 2, 4255970ull},
    {2069, 2, 4280763ull},
    {2081, 2, 4330564ull},
    {2083, 2, 4338890ull},
    {2087, 2, 4355570ull},
    {2089, 2, 4363928ull},
    {2099, 2, 4405802ull},
    {2111, 2, 4456322ull},
    {2113, 2, 4464774ull},
    {2129, 2, 4532644ull},
    {2131, 2, 4541162ull},
    {2137, 2, 4566774ull},
    {2141, 2, 4583883ull},
    {2143, 2, 4592450ull},
    {2153, 2, 4635412ull},
    {2161, 2, 4669928ull},
    {2179, 2, 4748042ull},
    {2203, 2, 4853210ull},
    {2207, 2, 4870850ull},
    {2213, 2, 4897371ull},
    {2221, 2, 4932843ull},
    {2237, 2, 5004171ull},
    {2239, 2, 5013122ull},
    {2243, 2, 5031050ull},
    {2251, 2, 5067002ull},
    {2267, 2, 5139290ull},
    {2269, 2, 5148363ull},
    {2273, 2, 5166532ull},
    {2281, 2, 5202968ull},
    {2287, 2, 5230370ull},
    {2293, 2, 5257851ull},
    {2297, 2, 5276212ull},
    {2309, 2, 5331483ull},
    {2311, 2, 5340722ull},
    {2333, 2, 5442891ull},
    {2339, 2, 5470922ull},
    {2341, 2, 5480283ull},
    {2347, 2, 5508410ull},
    {2351, 2, 5527202ull},
    {2357, 2, 5555451ull},
    {2371, 2, 5621642ull},
    {2377, 2, 5650134ull},
    {2381, 2, 5669163ull},
    {2383, 2, 5678690ull},
    {2389, 2, 5707323ull},
    {2393, 2, 5726452ull},
    {2399, 2, 5755202ull},
    {2411, 2, 5812922ull},
    {2417, 2, 5841892ull},
    {2423, 2, 5870930ull},
    {2437, 2, 5938971ull},
    {2441, 2, 5958484ull},
    {2447, 2, 5987810ull},
    {2459, 2, 6046682ull},
    {2467, 2, 6086090ull},
    {2473, 2, 6115734ull},
    {2477, 2, 6135531ull},
    {2503, 2, 6265010ull},
    {2521, 2, 6355452ull},
    {2531, 2, 6405962ull},
    {2539, 2, 6446522ull},
    {2543, 2, 6466850ull},
    {2549, 2, 6497403ull},
    {2551, 2, 6507602ull},
    {2557, 2, 6538251ull},
    {2579, 2, 6651242ull},
    {2591, 2, 6713282ull},
    {2593, 2, 6723654ull},
    {2609, 2, 6806884ull},
    {2617, 2, 6848694ull},
    {2621, 2, 6869643ull},
    {2633, 2, 6932692ull},
    {2647, 2, 7006610ull},
    {2657, 2, 7059652ull},
    {2659, 2, 7070282ull},
    {2663, 2, 7091570ull},
    {2671, 2, 7134242ull},
    {2677, 2, 7166331ull},
    {2683, 2, 7198490ull},
    {2687, 2, 7219970ull},
    {2689, 2, 7230734ull},
    {2693, 2, 7252251ull},
    {2699, 2, 7284602ull},
    {2707, 2, 7327850ull},
    {2711, 2, 7349522ull},
    {2713, 2, 7360374ull},
    {2719, 2, 7392962ull},
    {2729, 2, 7447444ull},
    {2731, 2, 7458362ull},
    {2741, 2, 7513083ull},
    {2749, 2, 7557003ull},
    {2753, 2, 7579012ull},
    {2767, 2, 7656290ull},
    {2777, 2, 7711732ull},
    {2789, 2, 7778523ull},
    {2791, 2, 7789682ull},
    {2797, 2, 7823211ull},
    {2801, 2, 7845604ull},
    {2803, 2, 7856810ull},
    {2819, 2, 7946762ull},
    {2833, 2, 8025894ull},
    {2837, 2, 8048571ull},
    {2843, 2, 8082650ull},
    {2851, 2, 8128202ull},
    {2857, 2, 8162454ull},
    {2861, 2, 8185323ull},
    {2879, 2, 8288642ull},
    {2887, 2, 8334770ull},
    {2897, 2, 8392612ull},
    {2903, 2, 8427410ull},
    {2909, 2, 8462283ull},
    {2917, 2, 8508891ull},
    {2927, 2, 8567330ull},
    {2939, 2, 8637722ull},
    {2953, 2, 8720214ull},
    {2957, 2, 8743851ull},
    {2963, 2, 8779370ull},
    {2969, 2, 8814964ull},
    {2971, 2, 8826842ull},
    {2999, 2, 8994002ull},
    {3001, 2, 9006008ull},
    {3011, 2, 9066122ull},
    {3019, 2, 9114362ull},
    {3023, 2, 9138530ull},
    {3037, 2, 9223371ull},
    {3041, 2, 9247684ull},
    {3049, 2, 9296412ull},
    {3061, 2, 9369723ull},
    {3067, 2, 9406490ull},
    {3079, 2, 9480242ull},
    {3083, 2, 9504890ull},
    {3089, 2, 9541924ull},
    {3109, 2, 9665883ull},
    {3119, 2, 9728162ull},
    {3121, 2, 9740648ull},
    {3137, 2, 9840772ull},
    {3163, 2, 10004570ull},
    {3167, 2, 10029890ull},
    {3169, 2, 10042568ull},
    {3181, 2, 10118763ull},
    {3187, 2, 10156970ull},
    {3191, 2, 10182482ull},
    {3203, 2, 10259210ull},
    {3209, 2, 10297684ull},
    {3217, 2, 10349094ull},
    {3221, 2, 10374843ull},
    {3229, 2, 10426443ull},
    {3251, 2, 10569002ull},
    {3253, 2, 10582011ull},
    {3257, 2, 10608052ull},
    {3259, 2, 10621082ull},
    {3271, 2, 10699442ull},
    {3299, 2, 10883402ull},
    {3301, 2, 10896603ull},
    {3307, 2, 10936250ull},
    {3313, 2, 10975974ull},
    {3319, 2, 11015762ull},
    {3323, 2, 11042330ull},
    {3329, 2, 11082244ull},
    {3331, 2, 11095562ull},
    {3343, 2, 11175650ull},
    {3347, 2, 11202410ull},
    {3359, 2, 11282882ull},
    {3361, 2, 11296332ull},
    {3371, 2, 11363642ull},
    {3373, 2, 11377131ull},
    {3389, 2, 11485323ull},
    {3391, 2, 11498882ull},
    {3407, 2, 11607650ull},
    {3413, 2, 11648571ull},
    {3433, 2, 11785494ull},
    {3449, 2, 11895604ull},
    {3457, 2, 11950854ull},
    {3461, 2, 11978523ull},
    {3463, 2, 11992370ull},
    {3467, 2, 12020090ull},
    {3469, 2, 12033963ull},
    {3491, 2, 12187082ull},
    {3499, 2, 12243002ull},
    {3511, 2, 12327122ull},
    {3517, 2, 12369291ull},
    {3527, 2, 12439730ull},
    {3529, 2, 12453854ull},
    {3533, 2, 12482091ull},
    {3539, 2, 12524522ull},
    {3541, 2, 12538683ull},
    {3547, 2, 12581210ull},
    {3557, 2, 12652251ull},
    {3559, 2, 12666482ull},
    {3571, 2, 12752042ull},
    {3581, 2, 12823563ull},
    {3583, 2, 12837890ull},
    {3593, 2, 12909652ull},
    {3607, 2, 13010450ull},
    {3613, 2, 13053771ull},
    {3617, 2, 13082692ull},
    {3623, 2, 13126130ull},
    {3631, 2, 13184162ull},
    {3637, 2, 13227771ull},
    {3643, 2, 13271450ull},
    {3659, 2, 13388282ull},
    {3671, 2, 13476242ull},
    {3673, 2, 13490934ull},
    {3677, 2, 13520331ull},
    {3691, 2, 13623482ull},
    {3697, 2, 13667814ull},
    {3701, 2, 13697403ull},
    {3709, 2, 13756683ull},
    {3719, 2, 13830962ull},
    {3727, 2, 13890530ull},
    {3733, 2, 13935291ull},
    {3739, 2, 13980122ull},
    {3761, 2, 14145124ull},
    {3767, 2, 14190290ull},
    {3769, 2, 14205368ull},
    {3779, 2, 14280842ull},
    {3793, 2, 14386854ull},
    {3797, 2, 14417211ull},
    {3803, 2, 14462810ull},
    {3821, 2, 14600043ull},
    {3823, 2, 14615330ull},
    {3833, 2, 14691892ull},
    {3847, 2, 14799410ull},
    {3851, 2, 14830202ull},
    {3853, 2, 14845611ull},
    {3863, 2, 14922770ull},
    {3877, 2, 15031131ull},
    {3881, 2, 15062164ull},
    {3889, 2, 15124332ull},
    {3907, 2, 15264650ull},
    {3911, 2, 15295922ull},
    {3917, 2, 15342891ull},
    {3919, 2, 15358562ull},
    {3923, 2, 15389930ull},
    {3929, 2, 15437044ull},
    {3931, 2, 15452762ull},
    {3943, 2, 15547250ull},
    {3947, 2, 15578810ull},
    {3967, 2, 15737090ull},
    {3989, 2, 15912123ull},
    {4001, 2, 16008004ull},
    {4003, 2, 16024010ull},
    {4007, 2, 16056050ull},
    {4013, 2, 16104171ull},
    {4019, 2, 16152362ull},
    {4021, 2, 16168443ull},
    {4027, 2, 16216730ull},
    {4049, 2, 16394404ull},
    {4051, 2, 16410602ull},
    {4057, 2, 16459254ull},
    {4073, 2, 16589332ull},
    {4079, 2, 16638242ull},
    {4091, 2, 16736282ull},
    {4093, 2, 16752651ull},
};

inline constexpr int kReductionPolyCount =
    static_cast<int>(sizeof(kReductionPolys) / sizeof(kReductionPolys[0]));

}  // namespace mf
