#pragma once

// Frozen reference values the tests compare against.  Nothing here is
// computed; a regression in the library cannot silently rewrite these.

namespace fixtures {

struct GoldenPair {
    const char* free_word;
    const char* prefix_word;
};

// phi(free_word) == prefix_word and psi(prefix_word) == free_word.
inline constexpr GoldenPair kGoldenPairs[] = {
    {"fduduufdfduufdff", "ffuduufdfdufuddf"},
    {"fduduufudfdduufudfdffdfufuddfuf", "fufuuddfdufufudffduddfufudfduuf"},
    {"dfu", "uuf"},
    {"uudd", "uuud"},
    {"udd", "uuu"},
    {"ufddfdfuuudfd", "uufufdddufuuf"},
    {"dfdfuuuufddfdfuuudfd", "uufuufdddfdfuuudfddf"},
    {"ufufddduddfdfdffuuuuufddfdfuuudfdf", "fuuufuduufuffdddfddfuuufufdddufuuf"},
};

// Indices into kGoldenPairs: the named forward examples and the named
// inverse examples.
inline constexpr int kNamedForward[] = {0, 1};
inline constexpr int kNamedInverse[] = {5, 6, 7};

struct RunFixture {
    const char* word;
    int runs;
};

inline constexpr RunFixture kRunFixtures[] = {
    {"dduuuuudddddduuu", 4},
    {"uuuuuuddduuuddud", 6},
};

// cc(t, m) for t = 2..6 (rows), m = 1..8 (columns).
inline constexpr long long kOrdinaryTable[5][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},
    {3, 5, 7, 9, 11, 13, 15, 17},
    {6, 16, 31, 51, 76, 106, 141, 181},
    {10, 40, 105, 219, 396, 650, 995, 1445},
    {15, 85, 295, 771, 1681, 3235, 5685, 9325},
};

// scc(t, m) for the paired rows t = {2,3}, {4,5}, {6,7}, {8,9}, {10,11},
// m = 1..8.
inline constexpr long long kSelfConjugateTable[5][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},
    {2, 4, 5, 7, 8, 10, 11, 13},
    {3, 9, 15, 27, 37, 55, 69, 93},
    {4, 16, 34, 76, 124, 216, 309, 471},
    {5, 25, 65, 175, 335, 675, 1095, 1875},
};

struct CatalogRow {
    const char* partition;
    const char* sequence;
    const char* path;
    bool self_conjugate;
};

// The sixteen 4-cores with exactly two corners, with their bead sequences
// and cornerless Motzkin paths.
inline constexpr CatalogRow kFourCoreCatalog[16] = {
    {"4,4,2,2", "[0,0,2,2]", "fuuffdd", true},
    {"2,2,2,1,1,1", "[0,2,2,2]", "uufffdd", false},
    {"3,3,1,1,1", "[0,1,2,2]", "ufuffdd", false},
    {"5,2,2", "[0,0,1,2]", "fufufdd", false},
    {"6,3", "[0,0,0,2]", "ffuufdd", false},
    {"3,3,1,1", "[0,2,2,0]", "uuffddf", false},
    {"4,2,2", "[0,0,2,1]", "fuufdfd", false},
    {"2,2,1,1,1", "[0,2,2,1]", "uuffdfd", false},
    {"4,1,1,1", "[0,1,1,2]", "uffufdd", true},
    {"5,2", "[0,0,2,0]", "fuufddf", false},
    {"3,1,1,1", "[0,1,2,1]", "ufufdfd", false},
    {"4,1,1", "[0,1,2,0]", "ufufddf", false},
    {"2,1,1,1", "[0,2,1,1]", "uufdffd", false},
    {"3,1,1", "[0,2,1,0]", "uufdfdf", true},
    {"4,1", "[0,2,0,0]", "uufddff", false},
    {"2,1", "[0,1,0,1]", "ufdfufd", true},
};

struct ChainRow {
    const char* partition;
    const char* sequence;
    const char* free_word;
    const char* prefix_word;
    const char* symmetric_word;
};

// Self-conjugate 4-cores with two corners: signed sequence, free path,
// prefix, symmetric path.
inline constexpr ChainRow kFourCoreChains[4] = {
    {"4,4,2,2", "[-1,-1]", "dffu", "uuff", "uufffdd"},
    {"4,1,1,1", "[-1,0]", "dfuf", "fuuf", "fuufddf"},
    {"3,1,1", "[0,-1]", "fdfu", "ufuf", "ufufdfd"},
    {"2,1", "[0,1]", "fufd", "ufdf", "ufdfufd"},
};

// Self-conjugate 5-cores with three corners.
inline constexpr ChainRow kFiveCoreChains[5] = {
    {"7,7,4,4,2,2,2", "[2,2]", "uffdd", "uuuff", "uuuffffddd"},
    {"7,3,3,1,1,1,1", "[1,2]", "fufdd", "uufuf", "uufuffdfdd"},
    {"6,3,3,1,1,1", "[2,1]", "ufdfd", "ufuuf", "ufuuffddfd"},
    {"6,2,1,1,1,1", "[2,0]", "ufddf", "fuuuf", "fuuuffdddf"},
    {"4,2,1,1", "[1,-1]", "fddfu", "uufdf", "uufdffufdd"},
};

} // namespace fixtures
