#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "cams/types.hpp"

namespace cams {

/// Parse result: the spectra plus the number of blocks/files that were
/// skipped with a warning (empty peak lists, unparsable .dta headers).
struct ParsedSpectra {
    std::vector<Spectrum> spectra;
    std::size_t skipped = 0;
};

/// Reads an MGF file. One Spectrum per BEGIN IONS/END IONS block; TITLE
/// becomes the id (blocks without TITLE get "<filename>#<ordinal>");
/// the first PEPMASS token is the precursor m/z; CHARGE is kept when
/// present. Peak lines are "mz intensity", collected, sorted and merged.
/// Blocks with no peaks are skipped and counted. Throws ParseError with
/// the offending line number on malformed input.
ParsedSpectra parse_mgf(const std::filesystem::path& path);

/// Reads every *.dta file in a directory, in file-name order. The first
/// line is "M+H charge"; the precursor m/z is derived as
/// (M+H + (charge-1) * 1.00728) / charge. Files that do not parse are
/// skipped and counted. An empty directory yields an empty list.
ParsedSpectra parse_dta_dir(const std::filesystem::path& dir);

/// Two-column TSV (no header): spectrum_id <TAB> peptide.
/// A duplicate id or a missing column is an error.
GroundTruth parse_ground_truth(const std::filesystem::path& path);

/// Writes the partition as TSV with header "cluster_id\tspectrum_id".
/// Clusters are numbered 0-based in normalized order (size descending,
/// ties by smallest member id); members are listed in ascending order.
/// Byte-identical output for a given partition.
void write_clusters(const Clustering& clustering, const std::filesystem::path& path);

/// Inverse of write_clusters; returns the partition in normalized order.
Clustering read_clusters(const std::filesystem::path& path);

/// Writes spectra as MGF (TITLE/PEPMASS/CHARGE headers, fixed-precision
/// peak lines) so that a generated dataset can be re-read by parse_mgf.
void write_mgf(const std::vector<Spectrum>& spectra, const std::filesystem::path& path);

/// Writes ground truth as the two-column TSV understood by parse_ground_truth.
void write_ground_truth(const GroundTruth& truth, const std::filesystem::path& path);

}  // namespace cams
