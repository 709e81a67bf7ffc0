#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "blockcensus/matgroup.hpp"

namespace blockcensus {

/// A faithful matrix action given by generators, read from the line-oriented
/// instance grammar:
///
///   p=5
///   d=1
///   label=F20
///   meta.family=semilinear
///   gen=2
///
/// Keys p, d, label and each meta.* appear at most once; gen repeats. A gen
/// value is d*d decimal integers in [0,p), single-space separated, row-major.
/// Lines starting with '#' are comments; the final newline is required.
struct InstanceRecord {
    std::string label;
    u32 p = 0;
    u32 d = 0;
    std::vector<Mat> generators;
    std::map<std::string, std::string> meta;  // keys without the "meta." prefix

    const std::string* meta_value(const std::string& key) const;
    friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

/// Parses and validates one instance. ParseError carries the offending line;
/// ValidationError covers semantic rejections (p not prime or < 5, d out of
/// [1,4], singular or duplicate generators, p dividing the group order).
InstanceRecord parse_instance(std::string_view text);

/// Canonical emission; parse_instance(serialize_instance(r)) == r.
std::string serialize_instance(const InstanceRecord& rec);

InstanceRecord load_instance_file(const std::string& path);

GroupHandle instance_group(const InstanceRecord& rec);

}  // namespace blockcensus
