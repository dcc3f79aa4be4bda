#pragma once

#include <optional>
#include <string>
#include <vector>

#include "texguard/forensics/candidate.hpp"
#include "texguard/pdf/document.hpp"

namespace texguard::forensics {

std::vector<HiddenCandidate> find_unindexed_streams(const pdf::PdfDocument& doc,
                                                    const DetectorOptions& options = {},
                                                    std::vector<std::string>* warnings = nullptr);

std::optional<HiddenCandidate> detect_post_eof(const pdf::PdfDocument& doc,
                                               const DetectorOptions& options = {});

// Comments longer than options.min_comment_len, the version header, the
// binary marker line and %%EOF aside. All-hex comments are hex-decoded.
std::vector<HiddenCandidate> detect_comment_payloads(const pdf::PdfDocument& doc,
                                                     const DetectorOptions& options = {});

std::vector<HiddenCandidate> detect_white_text(const pdf::PdfDocument& doc,
                                               const DetectorOptions& options = {},
                                               std::vector<std::string>* warnings = nullptr);

struct ScanReport {
  std::string file;
  std::vector<HiddenCandidate> candidates;  // unindexed, white text, comment, post-EOF
  std::vector<std::string> warnings;
};

ScanReport scan_document(const pdf::PdfDocument& doc, const DetectorOptions& options = {});

// Candidate ids are "c1", "c2", ... in report order.
std::string candidate_id(std::size_t index);

std::string scan_report_json(const ScanReport& report);
std::string scan_report_text(const ScanReport& report);

}  // namespace texguard::forensics
