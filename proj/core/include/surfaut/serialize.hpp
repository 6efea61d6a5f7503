#pragma once

#include <string>

#include "surfaut/classifier.hpp"

namespace surfaut::io {

inline constexpr const char* kDescriptorFormatVersion = "1";
inline constexpr const char* kReportSchema = "surfaut-report/1";
inline constexpr const char* kBatchSchema = "surfaut-batch/1";

// Strict parse of a descriptor document:
//   {"format_version": "1", "surface": {"kind": ..., ...}}
// Unknown keys, wrong types and unsupported versions are parse errors.
// Field names are documented in docs/descriptor-schema.md.
classifier::SurfaceDescriptor descriptor_from_json(const std::string& text);

// Canonical re-serialization (the echo embedded in reports).
std::string descriptor_to_json(const classifier::SurfaceDescriptor& desc);

// Self-describing machine report: schema, tool version, descriptor echo,
// ladder table with rule citations.  Deterministic byte-for-byte.
std::string report_document(const classifier::SurfaceDescriptor& desc,
                            const classifier::ClassificationReport& report);

struct ParsedDocument {
  classifier::SurfaceDescriptor descriptor;
  classifier::ClassificationReport report;
};

// Inverse of report_document; re-emitting a parsed document is a fixed point.
ParsedDocument report_document_parse(const std::string& text);

}  // namespace surfaut::io
