#pragma once

#include <stdexcept>
#include <string>

namespace itinopt {

enum class Errc {
    ok = 0,
    invalid_argument,
    invalid_spec,
    parse_error,
    schema_violation,
    io_error,
    index_out_of_range,
    length_mismatch,
    insufficient_data,
    singular_design,
    no_feasible_solution,
    empty_front,
    invalid_start,
    unknown_catalog,
    optimizer_failed,
    timeout,
    topic_closed,
    server_unreachable,
    internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace itinopt
