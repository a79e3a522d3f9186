#include "clime/corpus.hpp"

#include "clime/errors.hpp"
#include "clime/util/fs.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace clime {

using nlohmann::json;

void to_json(json& j, const CorpusStats& s) {
    j = json{{"total", s.total},
             {"kept_after_language", s.kept_after_language},
             {"kept_after_relevance", s.kept_after_relevance},
             {"kept_after_dedup", s.kept_after_dedup}};
    if (s.kappa) {
        j["kappa"] = *s.kappa;
    }
}

LoadReport load_corpus(const std::filesystem::path& path, CorpusFormat format) {
    (void)format;  // jsonl is the only format
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("corpus file not found: " + path.string());
    }

    LoadReport report;
    std::unordered_map<std::string, std::size_t> first_line_of_id;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        PostRecord record;
        try {
            record = json::parse(line).get<PostRecord>();
            validate_record(record);
        } catch (const ValidationError& e) {
            report.issues.push_back({line_no, e.what()});
            continue;
        } catch (const json::exception& e) {
            report.issues.push_back({line_no, e.what()});
            continue;
        }
        auto [it, inserted] = first_line_of_id.emplace(record.record_id, line_no);
        if (!inserted) {
            std::ostringstream msg;
            msg << "duplicate record_id '" << record.record_id << "' at lines "
                << it->second << " and " << line_no;
            throw ValidationError(msg.str());
        }
        report.records.push_back(std::move(record));
    }
    return report;
}

void save_corpus(const std::filesystem::path& path, std::span<const PostRecord> records) {
    std::string out;
    for (const auto& r : records) {
        out += to_jsonl_line(r);
        out += '\n';
    }
    util::atomic_write_file(path, out);
}

std::vector<PostRecord> filter_relevance(std::vector<PostRecord> records) {
    std::vector<PostRecord> kept;
    kept.reserve(records.size());
    for (auto& r : records) {
        if (r.relevance_flag) kept.push_back(std::move(r));
    }
    return kept;
}

}  // namespace clime
