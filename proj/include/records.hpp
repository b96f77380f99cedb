#pragma once

#include <istream>
#include <string>
#include <vector>

#include "splice.hpp"

// Plain-text knot record files. One record per block, blocks separated by
// blank lines, each line `key: value`. Recognized keys:
//
//   name      (required, must be unique within the file)
//   lambda_w  Casson-Walker invariant of the ambient sphere      (rational)
//   lambda2   degree-4 invariant of the ambient sphere           (rational)
//   a2, a4    Conway coefficients of the knot                    (rational)
//   v         coefficient of the two-legged theta class          (rational)
//   framing   self-linking number, written `u/v` or `u`          (fraction)
//
// Missing numeric keys default to 0; a missing framing means the preferred
// parallel 0/1. Unknown keys, repeated keys, and repeated names are errors.
namespace records {

struct NamedRecord {
    std::string name;
    splice::KnotRecord data;
};

std::vector<NamedRecord> parse_records(std::istream& in);
std::vector<NamedRecord> parse_records_text(const std::string& text);

// Reads and parses a record file; unreadable paths raise ValidationError.
std::vector<NamedRecord> load_records_file(const std::string& path);

// Looks a record up by name; unknown names raise ValidationError.
const splice::KnotRecord& find_record(const std::vector<NamedRecord>& list,
                                      const std::string& name);

}  // namespace records
