#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "segstab/model.hpp"

namespace segstab {

/// Raised on malformed instance documents; `where` is a JSON-pointer-like
/// location ("/points/3/w") or a byte position for syntax errors.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, std::string what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

/// Result document: {"variant","cost","selected","lp_value","ratio_vs_lp","seed"?}
/// plus optional derandomization fields ("bound","bound_satisfied") and the
/// union-objects "h".
struct ResultDoc {
    std::string variant;
    double cost = 0.0;
    std::vector<int> selected;
    double lp_value = 0.0;
    double ratio_vs_lp = 0.0;
    std::optional<std::uint64_t> seed;
    std::optional<double> bound;
    std::optional<bool> bound_satisfied;
    std::optional<int> h;
};

std::string serialize_result(const ResultDoc& r);

}  // namespace segstab
