#pragma once

// Flat-file serialization. Floats are fixed-point with 9 decimals, '.'
// separator, '\n' line ends; negative zero prints as zero. Output depends
// only on the input values.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qillum/illumination.hpp"
#include "qillum/sweep.hpp"

namespace qillum {

inline constexpr std::string_view kRecordHeader =
    "c1,c2,c3,lambda1,lambda2,lambda3,lambda4,concurrence,eof,discord_in,chi_q,chi_c,qa,"
    "delta_enc,separable";

std::string format_fixed(double v, int decimals = 9);

/// Header plus one row per record. Throws DomainError for an empty span.
void write_records(std::ostream& os, std::span<const AdvantageRecord> records);
void write_records_file(const std::filesystem::path& path,
                        std::span<const AdvantageRecord> records);

/// Inverse of write_records up to the 9-decimal quantization. Throws
/// FormatError naming the offending line.
std::vector<AdvantageRecord> read_records(std::istream& is);
std::vector<AdvantageRecord> read_records_file(const std::filesystem::path& path);

/// One row per populated cell in (x bin, y bin) order.
void write_cluster(std::ostream& os, const ClusterGrid& grid);

void write_toy_curves(std::ostream& os, std::span<const ToyDetectionPoint> points);

/// Throws IoError when the file cannot be opened or written.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qillum
