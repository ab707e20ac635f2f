#pragma once

#include <string>

#include "goalplace/netlist.hpp"

namespace goalplace {

enum class NetlistFormat { jsonl, bookshelf_like };

/// Parses a netlist file. JSON-lines is the native format; bookshelf_like
/// reads the classic UCLA .aux/.nodes/.nets/.pl/.scl quartet (subset: no
/// weights, no non-default orientations). Parse errors carry the offending
/// line number.
Netlist parse_netlist(const std::string& path, NetlistFormat format);

/// Writes the JSON-lines netlist format. parse(save(nl)) reproduces nl
/// exactly (doubles are printed round-trip safe).
void save_netlist(const Netlist& nl, const std::string& path);

Placement load_placement(const std::string& path, const Netlist& nl);
void save_placement(const Placement& placement, const Netlist& nl,
                    const std::string& path);

SizeTable load_size_table(const std::string& path);
SlackTable load_slacks(const std::string& path);

}  // namespace goalplace
