#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rindex/dates.hpp"

namespace rindex {

/// Opaque researcher identity. Equality is exact string match; the ledger
/// never attempts name disambiguation.
struct ResearcherId {
    std::string value;
    auto operator<=>(const ResearcherId&) const = default;
};

/// One publication and the review demand it placed on the community.
/// reviews_received is the authoritative per-paper total; linked review
/// events are supplementary evidence (see cross_check_review_counts).
struct PaperRecord {
    std::string paper_id;
    Date publication_date{};
    std::vector<ResearcherId> authors;
    std::int64_t reviews_received = 0;
    bool operator==(const PaperRecord&) const = default;
};

enum class EventKind { manuscript_review, editorial_round, editorial_paper };

std::string_view to_string(EventKind kind);
std::optional<EventKind> event_kind_from_string(std::string_view text);

/// One act of reviewing or editorial handling. paper_id is optional:
/// reviews performed for venues outside the ingested paper set still count.
struct ReviewEvent {
    std::string event_id;
    ResearcherId reviewer;
    Date event_date{};
    EventKind kind = EventKind::manuscript_review;
    bool excluded = false;
    std::optional<std::string> exclusion_reason;
    std::optional<std::string> paper_id;
    bool operator==(const ReviewEvent&) const = default;
};

enum class EditorialMode { per_round, per_paper };

/// Policy knobs for one evaluation run. The lag defers a publication's
/// responsibility; it never delays credit for completed reviews.
struct EvaluationConfig {
    Date as_of{};
    std::optional<Date> window_start;
    int lag_months = 24;
    EditorialMode editorial_mode = EditorialMode::per_round;
    bool honor_exclusions = true;
};

/// Returns an error message if the config violates its own invariants.
std::optional<std::string> config_problem(const EvaluationConfig& config);

enum class SubjectKind { paper, event };

struct ValidationIssue {
    SubjectKind subject_kind = SubjectKind::paper;
    std::string subject_id;
    std::string message;
    bool operator==(const ValidationIssue&) const = default;
};

/// Validated, immutable ledger. Only validate_dataset can construct one.
class Dataset {
public:
    const std::map<std::string, PaperRecord>& papers() const { return papers_; }
    const std::map<std::string, ReviewEvent>& events() const { return events_; }
    const std::set<ResearcherId>& researchers() const { return researchers_; }

    std::vector<PaperRecord> paper_records() const;
    std::vector<ReviewEvent> event_records() const;

    bool operator==(const Dataset&) const = default;

private:
    Dataset() = default;
    friend struct ValidationResult;
    friend ValidationResult validate_dataset(std::vector<PaperRecord> papers,
                                             std::vector<ReviewEvent> events);

    std::map<std::string, PaperRecord> papers_;
    std::map<std::string, ReviewEvent> events_;
    std::set<ResearcherId> researchers_;
};

struct ValidationResult {
    std::optional<Dataset> dataset; // present iff errors is empty
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;
    bool ok() const { return dataset.has_value(); }
};

/// Checks every type invariant and reports the complete list of violations,
/// not just the first. Self-reviews (reviewer among the linked paper's
/// authors) and duplicate manuscript/editorial engagement on one paper are
/// warnings, never errors.
ValidationResult validate_dataset(std::vector<PaperRecord> papers,
                                  std::vector<ReviewEvent> events);

std::string trim(std::string_view text);

} // namespace rindex
