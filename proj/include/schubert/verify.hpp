#ifndef SCHUBERT_VERIFY_HPP
#define SCHUBERT_VERIFY_HPP

#include <functional>
#include <iosfwd>
#include <string>

namespace schubert::verify {

// Returns the expected text of a named fixture (table_a6.txt, ...); throws
// when the fixture is unavailable.
using FixtureLookup = std::function<std::string(const std::string&)>;

struct Report {
    std::ostream* out = nullptr;
    int passed = 0;
    int failed = 0;

    void check(const std::string& name, bool ok);
    bool all_ok() const { return failed == 0; }
};

// Exact text reproduction of the published decomposition tables (lengths
// through 10) and multiplication tables (degrees 9 and 10) for the three
// exceptional quotients.
bool run_tables_suite(const FixtureLookup& fixtures, std::ostream& out, int jobs = 1);

// Structure constants against brute-force Littlewood-Richardson coefficients
// on every type-A Grassmannian with n <= 6.
bool run_grassmannian_suite(std::ostream& out);

// Commutativity of every published-table entry, reduced-word independence,
// associativity, top-degree duality, nonnegativity throughout.
bool run_properties_suite(std::ostream& out, int jobs = 1);

}  // namespace schubert::verify

#endif
