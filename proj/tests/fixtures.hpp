#ifndef CONFHOM_TESTS_FIXTURES_HPP
#define CONFHOM_TESTS_FIXTURES_HPP

#include <string>

// Hand-built manifold documents used across the test binaries.
namespace fixtures {

// Closed orientable 6-manifold with two odd generators and a perfect pairing;
// exercises mixed-parity Koszul signs end to end. Betti: 1, 0, 0, 2, 0, 0, 1.
inline std::string s3xs3() {
    return R"({
      "name": "S3xS3",
      "dim": 6,
      "open": false,
      "orientable": true,
      "hc": {"0": 1, "3": 2, "6": 1},
      "betti": {"0": 1, "3": 2, "6": 1},
      "cup": [
        {"p": 0, "a": 0, "q": 0, "b": 0, "value": [[0, "1/1"]]},
        {"p": 0, "a": 0, "q": 3, "b": 0, "value": [[0, "1/1"]]},
        {"p": 0, "a": 0, "q": 6, "b": 0, "value": [[0, "1/1"]]},
        {"p": 0, "a": 0, "q": 3, "b": 1, "value": [[1, "1/1"]]},
        {"p": 3, "a": 0, "q": 3, "b": 1, "value": [[0, "1/1"]]}
      ]
    })";
}

// Open orientable 6-manifold whose U-part has two odd generators; the cup
// table vanishes for degree reasons. Betti of the underlying space: 1, 2, 1.
inline std::string t2xr4() {
    return R"({
      "name": "T2xR4",
      "dim": 6,
      "open": true,
      "orientable": true,
      "hc": {"4": 1, "5": 2, "6": 1},
      "betti": {"0": 1, "1": 2, "2": 1},
      "cup": []
    })";
}

// Open even-cohomology 6-manifold with dim H^2 = 2 (connected-sum-style).
inline std::string n2_open() {
    return R"({
      "name": "N2",
      "dim": 6,
      "open": true,
      "orientable": true,
      "hc": {"2": 1, "4": 2, "6": 1},
      "betti": {"0": 1, "2": 2, "4": 1},
      "cup": []
    })";
}

// Open even-cohomology 6-manifold with dim H^2 = 3.
inline std::string n3_open() {
    return R"({
      "name": "N3",
      "dim": 6,
      "open": true,
      "orientable": true,
      "hc": {"4": 3, "6": 1},
      "betti": {"0": 1, "2": 3},
      "cup": []
    })";
}

// Odd-dimensional closed fixture with mixed-parity homology; the cup table is
// irrelevant to the closed form and left empty.
inline std::string t3() {
    return R"({
      "name": "T^3",
      "dim": 3,
      "open": false,
      "orientable": true,
      "hc": {"0": 1, "1": 3, "2": 3, "3": 1},
      "betti": {"0": 1, "1": 3, "2": 3, "3": 1},
      "cup": []
    })";
}

// Non-orientable shell: even cohomology is undecidable from this data.
inline std::string nonorientable_open() {
    return R"({
      "name": "NO6",
      "dim": 6,
      "open": true,
      "orientable": false,
      "hc": {},
      "hc_twisted": {"6": 1},
      "cup": []
    })";
}

// Open 4-manifold with a nonzero compactly supported cup square (punctured
// projective plane); the smallest open fixture with a nonzero differential.
inline std::string cp2_minus_point() {
    return R"({
      "name": "CP2-pt",
      "dim": 4,
      "open": true,
      "orientable": true,
      "hc": {"2": 1, "4": 1},
      "betti": {"0": 1, "2": 1},
      "cup": [
        {"p": 2, "a": 0, "q": 2, "b": 0, "value": [[0, "1/1"]]}
      ]
    })";
}

// Punctured torus: odd compactly supported classes with a nonzero
// antisymmetric pairing into the top degree.
inline std::string torus_minus_point() {
    return R"({
      "name": "T2-pt",
      "dim": 2,
      "open": true,
      "orientable": true,
      "hc": {"1": 2, "2": 1},
      "betti": {"0": 1, "1": 2},
      "cup": [
        {"p": 1, "a": 0, "q": 1, "b": 1, "value": [[0, "1/1"]]}
      ]
    })";
}

// Violates graded commutativity on purpose; must be rejected at load.
inline std::string corrupt_cup() {
    return R"({
      "name": "corrupt",
      "dim": 4,
      "open": false,
      "orientable": true,
      "hc": {"0": 1, "2": 2, "4": 1},
      "cup": [
        {"p": 2, "a": 0, "q": 2, "b": 1, "value": [[0, "1/1"]]},
        {"p": 2, "a": 1, "q": 2, "b": 0, "value": [[0, "-1/1"]]}
      ]
    })";
}

}  // namespace fixtures

#endif
