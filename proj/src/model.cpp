#include "rindex/model.hpp"

#include <algorithm>
#include <utility>

namespace rindex {

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::manuscript_review: return "manuscript_review";
        case EventKind::editorial_round: return "editorial_round";
        case EventKind::editorial_paper: return "editorial_paper";
    }
    return "unknown";
}

std::optional<EventKind> event_kind_from_string(std::string_view text) {
    if (text == "manuscript_review") return EventKind::manuscript_review;
    if (text == "editorial_round") return EventKind::editorial_round;
    if (text == "editorial_paper") return EventKind::editorial_paper;
    return std::nullopt;
}

std::optional<std::string> config_problem(const EvaluationConfig& config) {
    if (!config.as_of.ok()) return "as_of is not a valid calendar date";
    if (config.window_start) {
        if (!config.window_start->ok()) return "window_start is not a valid calendar date";
        if (*config.window_start > config.as_of) return "window_start is after as_of";
    }
    if (config.lag_months < 0) return "lag_months is negative";
    return std::nullopt;
}

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

std::vector<PaperRecord> Dataset::paper_records() const {
    std::vector<PaperRecord> out;
    out.reserve(papers_.size());
    for (const auto& [id, paper] : papers_) out.push_back(paper);
    return out;
}

std::vector<ReviewEvent> Dataset::event_records() const {
    std::vector<ReviewEvent> out;
    out.reserve(events_.size());
    for (const auto& [id, event] : events_) out.push_back(event);
    return out;
}

namespace {

bool id_blank(const std::string& id) { return trim(id).empty(); }

} // namespace

ValidationResult validate_dataset(std::vector<PaperRecord> papers,
                                  std::vector<ReviewEvent> events) {
    ValidationResult result;
    auto error = [&result](SubjectKind kind, const std::string& id, std::string message) {
        result.errors.push_back({kind, id, std::move(message)});
    };
    auto warn = [&result](SubjectKind kind, const std::string& id, std::string message) {
        result.warnings.push_back({kind, id, std::move(message)});
    };

    std::map<std::string, PaperRecord> paper_map;
    for (const PaperRecord& paper : papers) {
        bool usable = true;
        if (id_blank(paper.paper_id)) {
            error(SubjectKind::paper, paper.paper_id, "empty paper_id");
            usable = false;
        } else if (paper_map.contains(paper.paper_id)) {
            error(SubjectKind::paper, paper.paper_id, "duplicate paper_id");
            usable = false;
        }
        if (!paper.publication_date.ok()) {
            error(SubjectKind::paper, paper.paper_id, "invalid publication_date");
            usable = false;
        }
        if (paper.authors.empty()) {
            error(SubjectKind::paper, paper.paper_id, "empty author list");
            usable = false;
        }
        std::set<ResearcherId> seen_authors;
        for (const ResearcherId& author : paper.authors) {
            if (id_blank(author.value)) {
                error(SubjectKind::paper, paper.paper_id, "empty researcher id in authors");
                usable = false;
            } else if (!seen_authors.insert(author).second) {
                error(SubjectKind::paper, paper.paper_id,
                      "duplicate author '" + author.value + "' within a paper");
                usable = false;
            }
        }
        if (paper.reviews_received < 0) {
            error(SubjectKind::paper, paper.paper_id, "negative reviews_received");
            usable = false;
        }
        if (usable) paper_map.emplace(paper.paper_id, paper);
    }

    std::map<std::string, ReviewEvent> event_map;
    for (const ReviewEvent& event : events) {
        bool usable = true;
        if (id_blank(event.event_id)) {
            error(SubjectKind::event, event.event_id, "empty event_id");
            usable = false;
        } else if (event_map.contains(event.event_id)) {
            error(SubjectKind::event, event.event_id, "duplicate event_id");
            usable = false;
        }
        if (id_blank(event.reviewer.value)) {
            error(SubjectKind::event, event.event_id, "empty reviewer id");
            usable = false;
        }
        if (!event.event_date.ok()) {
            error(SubjectKind::event, event.event_id, "invalid event_date");
            usable = false;
        }
        if (event.excluded && event.kind != EventKind::manuscript_review) {
            error(SubjectKind::event, event.event_id,
                  "excluded flag on a non-manuscript event");
            usable = false;
        }
        if (event.paper_id) {
            auto it = paper_map.find(*event.paper_id);
            if (it == paper_map.end()) {
                error(SubjectKind::event, event.event_id,
                      "dangling paper reference '" + *event.paper_id + "'");
                usable = false;
            } else if (std::ranges::find(it->second.authors, event.reviewer) !=
                       it->second.authors.end()) {
                warn(SubjectKind::event, event.event_id,
                     "reviewer '" + event.reviewer.value +
                         "' is an author of the linked paper '" + *event.paper_id + "'");
            }
        }
        if (usable) event_map.emplace(event.event_id, event);
    }

    // A researcher both refereeing and editorially handling the same paper
    // is counted twice by the engine; surface it for the editor to judge.
    std::set<std::pair<std::string, std::string>> manuscript_pairs;
    for (const auto& [id, event] : event_map) {
        if (event.kind == EventKind::manuscript_review && event.paper_id) {
            manuscript_pairs.insert({event.reviewer.value, *event.paper_id});
        }
    }
    for (const auto& [id, event] : event_map) {
        if (event.kind != EventKind::manuscript_review && event.paper_id &&
            manuscript_pairs.contains({event.reviewer.value, *event.paper_id})) {
            warn(SubjectKind::event, id,
                 "reviewer '" + event.reviewer.value +
                     "' has both a manuscript review and editorial handling of paper '" +
                     *event.paper_id + "'; both count");
        }
    }

    if (!result.errors.empty()) return result;

    Dataset dataset;
    dataset.papers_ = std::move(paper_map);
    dataset.events_ = std::move(event_map);
    for (const auto& [id, paper] : dataset.papers_) {
        dataset.researchers_.insert(paper.authors.begin(), paper.authors.end());
    }
    for (const auto& [id, event] : dataset.events_) {
        dataset.researchers_.insert(event.reviewer);
    }
    result.dataset = std::move(dataset);
    return result;
}

} // namespace rindex
