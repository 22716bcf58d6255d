#ifndef SCHUBERT_FIXTURES_HPP
#define SCHUBERT_FIXTURES_HPP

#include <string>

namespace schubert::fixtures {

// Embedded copy of tests/fixtures/<name>; NotFoundError for unknown names.
// Generated at build time so the verify subcommand runs without a checkout.
std::string get(const std::string& name);

}  // namespace schubert::fixtures

#endif
