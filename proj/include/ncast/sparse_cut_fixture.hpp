#ifndef NCAST_SPARSE_CUT_FIXTURE_HPP
#define NCAST_SPARSE_CUT_FIXTURE_HPP

// Random plane unit-disk instance (N=60, M=8, generator seed 177) in which a
// pocket of 8 nodes in the lower-right corner is reached only through nodes
// 40 and 44. Under IR-MS both transmit at 8/5 = 1.6, so the broadcast
// capacity is 3.2 while the target is 8.

#include <array>
#include <string_view>

namespace ncast::fixtures {

inline constexpr double kSparseCutDensity = 8.0;
inline constexpr std::array<unsigned, 2> kSparseCutFrontier = {40, 44};

inline constexpr std::string_view kSparseCutTopology = R"(
60 0.20601290774570113 0 1 random 8 177
0 0.45244303198287517 0.9110547335173
1 0.9557531336695823 0.2613250328495669
2 0.7559324397190822 0.1089737196076872
3 0.8620456224000728 0.23257765274260755
4 0.6262545934676153 0.84593349147302
5 0.10347028391124025 0.17587496996138174
6 0.15422494843578782 0.4380999554158339
7 0.8247301967255685 0.7203015606382162
8 0.5194538701553026 0.289670684341355
9 0.5366280237173543 0.9299111829575839
10 0.29508175762862165 0.7940009414706499
11 0.8426866187140417 0.7907881867050122
12 0.1959661802801861 0.18015986552526897
13 0.20054642373538822 0.4468969290486775
14 0.15027440920984325 0.16657492234209337
15 0.007790617856885951 0.7158038261407231
16 0.9039080077515016 0.03829923439729288
17 0.7117108305634889 0.9225490085644981
18 0.7065965460999163 0.030242022847871697
19 0.28359401050323996 0.5871883817061284
20 0.7198306689096856 0.11022122941778478
21 0.05140132314188228 0.16591233131969596
22 0.46172536349241056 0.7860168749746606
23 0.19584592596343298 0.5627846762854227
24 0.4011550710966516 0.9238857958032817
25 0.15598773613494543 0.8442719954006771
26 0.808332996612119 0.63731581669566
27 0.14169627222513437 0.40069724582729593
28 0.932435435102063 0.8090903830591089
29 0.8070085743681797 0.002472443960657711
30 0.3869951798382264 0.22400422549569632
31 0.46020335803548706 0.7278566727503769
32 0.6781882666450668 0.1259099933436808
33 0.6638263531630657 0.4041860231593446
34 0.6537834872108798 0.37179346851741923
35 0.47289926492429935 0.8818548838848815
36 0.10435604432925716 0.5865059675922898
37 0.445226103592269 0.5079535277243933
38 0.554884802677068 0.4147328394592007
39 0.4767569802687798 0.0782404746514439
40 0.5157725277769175 0.10742690437657643
41 0.11005529706262529 0.6274913560388868
42 0.9011847912158697 0.6492932421905324
43 0.7936702943803559 0.5030039810887503
44 0.7146447711946513 0.2623738072759989
45 0.5160238879069151 0.659114202930222
46 0.5111114455583834 0.8124137575170387
47 0.6159372328789224 0.6980601780567064
48 0.7485710587386102 0.6378106563657744
49 0.8579048288945426 0.9189607789356962
50 0.5164967590983488 0.3509185807506111
51 0.43335886631365406 0.10332718408771069
52 0.1963705418802406 0.6150011420309756
53 0.3210208305612705 0.2042881289124422
54 0.9316553974045698 0.5012048136773931
55 0.32903635302774437 0.02665965685213212
56 0.5591190195107908 0.9795593849596022
57 0.6125030339953884 0.4032061999686649
58 0.23616558284041866 0.3183637443449485
59 0.08071135285459163 0.433081268942898
0 9 4 9 10 22 24 31 35 46 56
1 1 3
2 7 3 16 18 20 29 32 44
3 5 1 2 16 20 44
4 9 0 9 17 22 31 35 46 47 56
5 4 12 14 21 58
6 9 13 19 23 27 36 41 52 58 59
7 6 11 26 28 42 48 49
8 9 30 33 34 38 40 44 50 51 57
9 8 0 4 17 22 24 35 46 56
10 7 0 22 24 25 31 35 52
11 7 7 17 26 28 42 48 49
12 7 5 14 21 30 53 55 58
13 9 6 19 23 27 36 41 52 58 59
14 5 5 12 21 53 58
15 3 25 36 41
16 5 2 3 18 20 29
17 5 4 9 11 49 56
18 6 2 16 20 29 32 40
19 7 6 13 23 36 37 41 52
20 8 2 3 16 18 29 32 40 44
21 3 5 12 14
22 10 0 4 9 10 24 31 35 45 46 47
23 8 6 13 19 27 36 41 52 59
24 8 0 9 10 22 31 35 46 56
25 2 10 15
26 7 7 11 42 43 47 48 54
27 6 6 13 23 36 58 59
28 4 7 11 42 49
29 5 2 16 18 20 32
30 9 8 12 39 40 50 51 53 55 58
31 9 0 4 10 22 24 35 45 46 47
32 6 2 18 20 29 40 44
33 7 8 34 38 43 44 50 57
34 7 8 33 38 43 44 50 57
35 9 0 4 9 10 22 24 31 46 56
36 9 6 13 15 19 23 27 41 52 59
37 5 19 38 45 50 57
38 6 8 33 34 37 50 57
39 5 30 40 51 53 55
40 8 8 18 20 30 32 39 51 55
41 8 6 13 15 19 23 36 52 59
42 7 7 11 26 28 43 48 54
43 6 26 33 34 42 48 54
44 8 2 3 8 20 32 33 34 57
45 5 22 31 37 46 47
46 10 0 4 9 22 24 31 35 45 47 56
47 7 4 22 26 31 45 46 48
48 6 7 11 26 42 43 47
49 4 7 11 17 28
50 7 8 30 33 34 37 38 57
51 6 8 30 39 40 53 55
52 7 6 10 13 19 23 36 41
53 7 12 14 30 39 51 55 58
54 3 26 42 43
55 6 12 30 39 40 51 53
56 7 0 4 9 17 24 35 46
57 7 8 33 34 37 38 44 50
58 9 5 6 12 13 14 27 30 53 59
59 7 6 13 23 27 36 41 58
)";

}  // namespace ncast::fixtures

#endif  // NCAST_SPARSE_CUT_FIXTURE_HPP
