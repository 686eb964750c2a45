// Frozen corpus expectations.
// Generated by tools/oracles/gen_expected_header.py from
// tools/oracles/expected.json -- do not edit by hand.
#pragma once

namespace kahler3::fx {

struct ModulusClass {
    const char* mod2;        // decimal approximation, 50 digits
    int mult;                // eigenvalue count in this modulus class
    int halving_steps;       // smallest N reaching a distinguished target
    const char* target;      // one | lambda1 | lambda2inv | lambda1inv-lambda2
    bool chain_ok;           // every intermediate stays inside the set
};

struct PolyFixture {
    const char* name;
    int coeffs[7];           // ascending degree
    long long q2[16];        // degree-2 action charpoly, ascending
    bool q2_squarefree;
    int n_factors;
    int factor_degrees[8];   // sorted ascending, with multiplicity
    const char* lambda1;     // decimal approximation, 50 digits
    const char* lambda2;
    const char* m1;
    const char* m2;
    const char* m3;
    int lambda1_factor_degree;
    const char* pattern;     // conjugacy pattern of the three plane moduli
    int subcase;             // 1..3 when rank 2; 0 otherwise
    int k_pairs;             // pair count when rank 2; -1 otherwise
    int bullet;              // 1..2 when rank 1; 0 otherwise
    int rank;
    int relation_a;          // m1^a * m3^b == 1 when rank 1; 0,0 otherwise
    int relation_b;
    bool relation_exact;     // relation proved by resultants, not just PSLQ
    int n_classes;
    ModulusClass classes[8];
    bool lambda1_eq_lambda2_squared;
    bool lambda2_eq_lambda1_squared;
};

inline constexpr PolyFixture kPolyFixtures[] = {
    {"S15",
     {1, 0, -1, 1, 0, -1, 1},
     {-1LL, -1LL, 0LL, 2LL, 3LL, 2LL, 0LL, -2LL, -1LL, 0LL, 0LL, -1LL, -1LL, 0LL, 0LL, 1LL},
     true,
     1,
     {15, 0, 0, 0, 0, 0, 0, 0},
     "1.1962490139547238275847077558426467322843404071730",
     "1.3599141493821189216112405503287680648785563598548",
     "1.1962490139547238275847077558426467322843404071730",
     "1.1368152730060177637197187554405129496199503744010",
     "0.73534053635249916591017966454722804303892930574028",
     15,
     "all-three-conjugate",
     1,
     2,
     0,
     2,
     0,
     0,
     false,
     6,
     {{"0.54072570440318114732414454673629010229913768732525", 1, 0, "lambda2inv", true},
         {"0.83594635258595786912775378891803057912038959091616", 4, 1, "lambda1", true},
         {"0.87965039153261487874802560985016528197770781506868", 4, 1, "lambda1inv-lambda2", true},
         {"1.2923489649397467004117993583788402914762652842336", 1, 0, "lambda1inv-lambda2", true},
         {"1.3599141493821189216112405503287680648785563598548", 4, 1, "lambda2inv", true},
         {"1.4310117033876490427830752405984170556168646507270", 1, 0, "lambda1", true},
         {"", 0, 0, "", false},
         {"", 0, 0, "", false}},
     false,
     false},
    {"grado9",
     {1, -1, 1, -2, 4, -3, 1},
     {-1LL, 1LL, 2LL, -2LL, 7LL, 1LL, -15LL, 8LL, -5LL, -6LL, 13LL, -3LL, -3LL, 5LL, -4LL, 1LL},
     true,
     2,
     {6, 9, 0, 0, 0, 0, 0, 0},
     "2.2872399973560356965167485522065523225747558083067",
     "2.0352173386695396565923062092686091105982900726848",
     "2.2872399973560356965167485522065523225747558083067",
     "0.88981363609510814220650573533891105937413090751943",
     "0.49134801527080102861637308442536695314699185335701",
     9,
     "all-three-conjugate",
     1,
     1,
     0,
     2,
     0,
     0,
     false,
     6,
     {{"0.24142287211055532081455942016334865031850100031919", 1, 0, "lambda2inv", true},
         {"0.43720816405622618481493467926927408088245623616127", 4, 1, "lambda1", true},
         {"0.79176830698079753966899742114751320168811437536821", 1, 0, "lambda1inv-lambda2", true},
         {"1.1238308331488803317291717359936527579131789622565", 4, 1, "lambda1inv-lambda2", true},
         {"2.0352173386695396565923062092686091105982900726848", 4, 1, "lambda2inv", true},
         {"5.2314668055052381799924831551915044324831884645983", 1, 0, "lambda1", true},
         {"", 0, 0, "", false},
         {"", 0, 0, "", false}},
     false,
     false},
    {"caso2",
     {1, -3, 2, -1, 2, 1, 1},
     {-1LL, 2LL, -1LL, 15LL, 13LL, 39LL, 22LL, 29LL, -25LL, -18LL, -23LL, 15LL, 1LL, -3LL, -2LL, 1LL},
     true,
     2,
     {3, 12, 0, 0, 0, 0, 0, 0},
     "2.7692923542386314152404094643350334926705530458989",
     "3.5244396051552558460430572291154316482686033124431",
     "2.7692923542386314152404094643350334926705530458989",
     "1.2726859985587325190911689377733317491547105613548",
     "0.28373305036559103846953643431071987823935382924986",
     3,
     "one-cubic-two-conjugate",
     2,
     1,
     0,
     2,
     0,
     0,
     false,
     6,
     {{"0.080504443869763020928914616595444466514375236775226", 1, 0, "lambda2inv", true},
         {"0.36110308052864737763464656215902813952641490762025", 4, 1, "lambda1", true},
         {"0.78573976702223578688382647693494155320939371336342", 4, 1, "lambda1inv-lambda2", true},
         {"1.6197296509274381116613788130032686914377045080285", 1, 0, "lambda1inv-lambda2", true},
         {"3.5244396051552558460430572291154316482686033124431", 4, 1, "lambda2inv", true},
         {"7.6689801432445416233558749551641286175380740453168", 1, 0, "lambda1", true},
         {"", 0, 0, "", false},
         {"", 0, 0, "", false}},
     false,
     false},
    {"four-orbit",
     {1, -2, 2, 1, 4, 1, 1},
     {-1LL, 2LL, 6LL, 4LL, 19LL, 28LL, -17LL, 7LL, 25LL, -2LL, -62LL, 25LL, 10LL, -1LL, -4LL, 1LL},
     true,
     4,
     {3, 3, 3, 6, 0, 0, 0, 0},
     "3.0795956234914387860104177508366260326290106746745",
     "4.0795956234914387860104177508366260326290106746745",
     "3.0795956234914387860104177508366260326290106746745",
     "1.3247179572447460259609088544780973407344040569017",
     "0.24512233375330723995049110364147130810539338222721",
     3,
     "three-cubic",
     0,
     -1,
     1,
     1,
     5,
     4,
     true,
     6,
     {{"0.060084958504667745812382165402511265050584203583354", 1, 0, "lambda2inv", true},
         {"0.32471795724474602596090885447809734073440405690173", 4, 1, "lambda1", true},
         {"0.75487766624669276004950889635852869189460661777279", 4, 1, "lambda1inv-lambda2", true},
         {"1.7548776662466927600495088963585286918946066177728", 1, 0, "lambda1inv-lambda2", true},
         {"4.0795956234914387860104177508366260326290106746745", 4, 1, "lambda2inv", true},
         {"9.4839092042276235979817443561513494059924254062508", 1, 0, "lambda1", true},
         {"", 0, 0, "", false},
         {"", 0, 0, "", false}},
     false,
     false},
    {"lambda1-eq-lambda2sq",
     {1, -1, 1, -2, 1, 0, 1},
     {-1LL, 1LL, -1LL, 4LL, -2LL, 4LL, -6LL, -1LL, -5LL, 6LL, 1LL, 3LL, -3LL, -1LL, -1LL, 1LL},
     false,
     3,
     {3, 3, 6, 0, 0, 0, 0, 0},
     "1.7548776662466927600495088963585286918946066177728",
     "1.3247179572447460259609088544780973407344040569017",
     "1.7548776662466927600495088963585286918946066177728",
     "0.75487766624669276004950889635852869189460661777279",
     "0.75487766624669276004950889635852869189460661777279",
     3,
     "one-cubic-two-conjugate",
     0,
     -1,
     1,
     1,
     1,
     2,
     true,
     3,
     {{"0.56984029099805326591139995811956864883979743912894", 6, 0, "lambda2inv", true},
         {"1.3247179572447460259609088544780973407344040569017", 8, 1, "lambda2inv", true},
         {"3.0795956234914387860104177508366260326290106746745", 1, 0, "lambda1", true},
         {"", 0, 0, "", false},
         {"", 0, 0, "", false},
         {"", 0, 0, "", false},
         {"", 0, 0, "", false},
         {"", 0, 0, "", false}},
     true,
     false},
    {"caso2-inverse",
     {1, 1, 2, -1, 2, -3, 1},
     {-1LL, 2LL, 3LL, -1LL, -15LL, 23LL, 18LL, 25LL, -29LL, -22LL, -39LL, -13LL, -15LL, 1LL, -2LL, 1LL},
     true,
     2,
     {3, 12, 0, 0, 0, 0, 0, 0},
     "3.5244396051552558460430572291154316482686033124431",
     "2.7692923542386314152404094643350334926705530458989",
     "3.5244396051552558460430572291154316482686033124431",
     "0.78573976702223578688382647693494155320939371336342",
     "0.36110308052864737763464656215902813952641490762025",
     12,
     "one-cubic-two-conjugate",
     2,
     1,
     0,
     2,
     0,
     0,
     false,
     6,
     {{"0.13039543476727879287505602649406163219696795351911", 1, 0, "lambda2inv", true},
         {"0.28373305036559103846953643431071987823935382924986", 4, 1, "lambda1", true},
         {"0.61738698148015737301081337432892664994040207102946", 1, 0, "lambda1inv-lambda2", true},
         {"1.2726859985587325190911689377733317491547105613548", 4, 1, "lambda1inv-lambda2", true},
         {"2.7692923542386314152404094643350334926705530458989", 4, 1, "lambda2inv", true},
         {"12.421674530386935730427971244882518324723908654211", 1, 0, "lambda1", true},
         {"", 0, 0, "", false},
         {"", 0, 0, "", false}},
     false,
     false}
};
inline constexpr int kNumPolyFixtures = 6;

struct Matrix3Fixture {
    const char* name;
    int m[3][3];
    int h11[9][9];           // transpose Kronecker square of m
    int n_blocks9;  int blocks9[9];     // descending
    int n_blocks15; int blocks15[15];   // descending
    bool unipotent9;
    int growth_exponent9;
    int growth_exponent15;
    double fit9_rho;  double fit9_k;    // reference numeric fit values
    double fit15_rho; double fit15_k;
    int printed[9][9];       // companion 9x9 recorded alongside the fixture
    bool printed_matches_kron;
    int n_printed_blocks; int printed_blocks[9];
};

inline constexpr Matrix3Fixture kMatrix3Fixtures[] = {
    {"unipotent-1",
     {{1, 0, 0}, {1, 1, 0}, {0, 1, 1}},
     {{1, 1, 0, 1, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 1, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 1, 1, 0}, {0, 0, 0, 0, 1, 1, 0, 1, 1}, {0, 0, 0, 0, 0, 1, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 1}},
     3,
     {5, 3, 1, 0, 0, 0, 0, 0, 0},
     5,
     {5, 3, 3, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
     true,
     4,
     4,
     1.000000395704716,
     4.00501223005775,
     1.000000395704716,
     4.00501223005775,
     {{1, 1, 0, 1, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 1, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 1, 1, 0}, {0, 0, 0, 0, 1, 1, 0, 1, 1}, {0, 0, 0, 0, 0, 1, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 1}},
     true,
     3,
     {5, 3, 1, 0, 0, 0, 0, 0, 0}},
    {"unipotent-2",
     {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}},
     {{1, 1, 0, 1, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1}},
     5,
     {3, 2, 2, 1, 1, 0, 0, 0, 0},
     9,
     {3, 2, 2, 2, 2, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
     true,
     2,
     2,
     1.0,
     2.0,
     1.0,
     2.0,
     {{1, 1, 0, 1, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 1, 1, 0}, {0, 0, 0, 0, 1, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1}},
     false,
     3,
     {4, 3, 2, 0, 0, 0, 0, 0, 0}}
};
inline constexpr int kNumMatrix3Fixtures = 2;

struct SurfaceFixture {
    const char* name;
    int n;
    int g[3][3];             // top-left n x n used
    int q[3][3];
    int sig_pos; int sig_neg;
    const char* cls;
    int dominant_degree;     // 0 when not applicable
    const char* lambda;      // decimal; empty when not applicable
    int n_blocks; int blocks[3];
    double growth_k_fit;     // reference; 0 when not recorded
};

inline constexpr SurfaceFixture kSurfaceFixtures[] = {
    {"loxodromic",
     2,
     {{2, 1, 0}, {1, 1, 0}, {0, 0, 0}},
     {{-2, 1, 0}, {1, 2, 0}, {0, 0, 0}},
     1,
     1,
     "loxodromic",
     2,
     "2.618033988749894902525738871190696954727",
     0,
     {0, 0, 0},
     0.0},
    {"parabolic",
     3,
     {{1, 2, 2}, {0, 1, 2}, {0, 0, 1}},
     {{0, 0, 1}, {0, -1, 0}, {1, 0, 0}},
     1,
     2,
     "parabolic",
     0,
     "",
     1,
     {3, 0, 0},
     2.000000000001063}
};

inline constexpr int kHodgeSig11[3] = {1, 8, 0};   // (+, -, 0)
inline constexpr int kHodgeSig20[3] = {0, 6, 0};
inline constexpr bool kHodgeOrthogonal = true;

// synthetic non-semisimple duality fixture
inline constexpr const char* kMixedLambda1 = "2";
inline constexpr const char* kMixedLambda2 = "2";
inline constexpr bool kMixedReciprocal = true;
inline constexpr bool kMixedSemisimple = false;
inline constexpr bool kMixedLambda2InTargets = false;
inline constexpr const char* kMixedExpectedStatus = "fail";

inline constexpr int kNumHuntQIrreducibleBound1 = 104;
inline constexpr int kHuntQIrreducibleBound1[104][7] = {
    {1, -1, -1, 0, 1, 0, 1},
    {1, -1, -1, 0, 1, 1, 1},
    {1, -1, -1, 1, 0, 0, 1},
    {1, -1, -1, 1, 1, -1, 1},
    {1, -1, -1, 1, 1, 0, 1},
    {1, -1, -1, 1, 1, 1, 1},
    {1, -1, 0, -1, 0, 1, 1},
    {1, -1, 0, -1, 1, 0, 1},
    {1, -1, 0, -1, 1, 1, 1},
    {1, -1, 0, 0, 0, 0, 1},
    {1, -1, 0, 0, 1, -1, 1},
    {1, -1, 0, 0, 1, 0, 1},
    {1, -1, 0, 0, 1, 1, 1},
    {1, -1, 0, 1, -1, 0, 1},
    {1, -1, 0, 1, 0, 0, 1},
    {1, -1, 0, 1, 0, 1, 1},
    {1, -1, 0, 1, 1, -1, 1},
    {1, -1, 0, 1, 1, 0, 1},
    {1, -1, 0, 1, 1, 1, 1},
    {1, -1, 1, -1, -1, 1, 1},
    {1, -1, 1, -1, 0, 0, 1},
    {1, -1, 1, -1, 0, 1, 1},
    {1, -1, 1, -1, 1, 1, 1},
    {1, -1, 1, 0, -1, 0, 1},
    {1, -1, 1, 0, -1, 1, 1},
    {1, -1, 1, 0, 0, -1, 1},
    {1, -1, 1, 0, 0, 0, 1},
    {1, -1, 1, 0, 0, 1, 1},
    {1, -1, 1, 0, 1, 0, 1},
    {1, -1, 1, 1, -1, -1, 1},
    {1, -1, 1, 1, -1, 0, 1},
    {1, -1, 1, 1, 0, -1, 1},
    {1, -1, 1, 1, 0, 1, 1},
    {1, -1, 1, 1, 1, 1, 1},
    {1, 0, -1, -1, 0, 1, 1},
    {1, 0, -1, -1, 1, 0, 1},
    {1, 0, -1, -1, 1, 1, 1},
    {1, 0, -1, 0, 1, -1, 1},
    {1, 0, -1, 0, 1, 1, 1},
    {1, 0, -1, 1, 0, -1, 1},
    {1, 0, -1, 1, 1, -1, 1},
    {1, 0, -1, 1, 1, 0, 1},
    {1, 0, 0, -1, -1, 1, 1},
    {1, 0, 0, -1, 0, 1, 1},
    {1, 0, 0, -1, 1, -1, 1},
    {1, 0, 0, -1, 1, 0, 1},
    {1, 0, 0, 0, 0, -1, 1},
    {1, 0, 0, 0, 0, 1, 1},
    {1, 0, 0, 0, 1, -1, 1},
    {1, 0, 0, 0, 1, 1, 1},
    {1, 0, 0, 1, -1, -1, 1},
    {1, 0, 0, 1, 0, -1, 1},
    {1, 0, 0, 1, 1, 0, 1},
    {1, 0, 0, 1, 1, 1, 1},
    {1, 0, 1, -1, -1, 0, 1},
    {1, 0, 1, -1, -1, 1, 1},
    {1, 0, 1, -1, 0, -1, 1},
    {1, 0, 1, -1, 0, 0, 1},
    {1, 0, 1, -1, 0, 1, 1},
    {1, 0, 1, 0, -1, -1, 1},
    {1, 0, 1, 0, -1, 1, 1},
    {1, 0, 1, 0, 0, -1, 1},
    {1, 0, 1, 0, 0, 1, 1},
    {1, 0, 1, 0, 1, -1, 1},
    {1, 0, 1, 0, 1, 1, 1},
    {1, 0, 1, 1, -1, -1, 1},
    {1, 0, 1, 1, -1, 0, 1},
    {1, 0, 1, 1, 0, -1, 1},
    {1, 0, 1, 1, 0, 0, 1},
    {1, 0, 1, 1, 0, 1, 1},
    {1, 1, -1, -1, 0, 0, 1},
    {1, 1, -1, -1, 1, -1, 1},
    {1, 1, -1, -1, 1, 0, 1},
    {1, 1, -1, -1, 1, 1, 1},
    {1, 1, -1, 0, 1, -1, 1},
    {1, 1, -1, 0, 1, 0, 1},
    {1, 1, 0, -1, -1, 0, 1},
    {1, 1, 0, -1, 0, -1, 1},
    {1, 1, 0, -1, 0, 0, 1},
    {1, 1, 0, -1, 1, -1, 1},
    {1, 1, 0, -1, 1, 0, 1},
    {1, 1, 0, -1, 1, 1, 1},
    {1, 1, 0, 0, 0, 0, 1},
    {1, 1, 0, 0, 1, -1, 1},
    {1, 1, 0, 0, 1, 0, 1},
    {1, 1, 0, 0, 1, 1, 1},
    {1, 1, 0, 1, 0, -1, 1},
    {1, 1, 0, 1, 1, -1, 1},
    {1, 1, 0, 1, 1, 0, 1},
    {1, 1, 1, -1, -1, 0, 1},
    {1, 1, 1, -1, -1, 1, 1},
    {1, 1, 1, -1, 0, -1, 1},
    {1, 1, 1, -1, 0, 1, 1},
    {1, 1, 1, -1, 1, -1, 1},
    {1, 1, 1, 0, -1, -1, 1},
    {1, 1, 1, 0, -1, 0, 1},
    {1, 1, 1, 0, 0, -1, 1},
    {1, 1, 1, 0, 0, 0, 1},
    {1, 1, 1, 0, 0, 1, 1},
    {1, 1, 1, 0, 1, 0, 1},
    {1, 1, 1, 1, -1, -1, 1},
    {1, 1, 1, 1, 0, -1, 1},
    {1, 1, 1, 1, 0, 0, 1},
    {1, 1, 1, 1, 1, -1, 1},
};

inline constexpr int kNumHuntTwoUnitModulusBound2 = 30;
inline constexpr int kHuntTwoUnitModulusBound2[30][7] = {
    {1, -2, 1, 1, 1, -2, 1},
    {1, -2, 1, 2, 1, -2, 1},
    {1, -2, 2, -1, 2, -2, 1},
    {1, -2, 2, 0, 2, -2, 1},
    {1, -2, 2, 1, 2, -2, 1},
    {1, -2, 2, 2, 2, -2, 1},
    {1, -1, 0, 2, 0, -1, 1},
    {1, -1, 1, 1, 1, -1, 1},
    {1, -1, 1, 2, 1, -1, 1},
    {1, -1, 2, 0, 2, -1, 1},
    {1, -1, 2, 1, 2, -1, 1},
    {1, -1, 2, 2, 2, -1, 1},
    {1, 0, 1, -2, 1, 0, 1},
    {1, 0, 1, 2, 1, 0, 1},
    {1, 0, 2, -2, 2, 0, 1},
    {1, 0, 2, -1, 2, 0, 1},
    {1, 0, 2, 1, 2, 0, 1},
    {1, 0, 2, 2, 2, 0, 1},
    {1, 1, 0, -2, 0, 1, 1},
    {1, 1, 1, -2, 1, 1, 1},
    {1, 1, 1, -1, 1, 1, 1},
    {1, 1, 2, -2, 2, 1, 1},
    {1, 1, 2, -1, 2, 1, 1},
    {1, 1, 2, 0, 2, 1, 1},
    {1, 2, 1, -2, 1, 2, 1},
    {1, 2, 1, -1, 1, 2, 1},
    {1, 2, 2, -2, 2, 2, 1},
    {1, 2, 2, -1, 2, 2, 1},
    {1, 2, 2, 0, 2, 2, 1},
    {1, 2, 2, 1, 2, 2, 1},
};

}  // namespace kahler3::fx
