#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relprice::csv {

using Row = std::vector<std::string>;

// RFC-4180 style reader: quoted fields, embedded commas/quotes/newlines,
// tolerant of CRLF endings. Returns all rows including the header.
std::vector<Row> read(std::istream& in);
std::vector<Row> read_file(const std::string& path);

std::string escape(const std::string& field);
void write_row(std::ostream& out, const Row& row);

}  // namespace relprice::csv
