#pragma once

#include "cyclic/cyclic_core.hpp"
#include "cyclic/subdiv.hpp"

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace cyclic {

/// Names accepted by resolve_params.
std::vector<std::string> preset_names();

/// Parameter values of a named preset for n points. Throws std::invalid_argument for an unknown
/// name or a preset defined only for another n.
RationalVector preset_values(std::string_view name, int n);

/// A preset name, a file of rationals, or an inline comma-separated list.
ParamVector resolve_params(std::string_view source, int n, int d);

/// One subdivision per non-empty line; parse errors are rethrown prefixed with `line N:`.
std::vector<Subdivision> read_subdivisions(std::string_view text, int n, int d);
std::vector<Subdivision> read_subdivision_file(const std::string& path, int n, int d);

/// n and d from the largest vertex and the cell sizes of a subdivision file, when not given.
std::pair<int, int> infer_shape(std::string_view text);

/// Strictly increasing rationals with random gaps and denominators up to 6.
RationalVector random_increasing(int n, std::mt19937_64& rng);

std::string read_text_file(const std::string& path);

}  // namespace cyclic
