#ifndef MLSUM_FRAMES_HPP
#define MLSUM_FRAMES_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mlsum/text_model.hpp"

namespace mlsum {

/// The five argument roles the ranking formulas consume. Closed set.
enum class Role { A0, A1, A2, AmTmp, AmLoc };

inline constexpr int kRoleCount = 5;

std::string_view role_label(Role role);                 // "A0", ..., "AM-LOC"
std::optional<Role> parse_role(std::string_view label);

/// One predicate-argument structure attached to a sentence.
struct Frame {
    int id = -1;           // global frame index
    int sentence_id = -1;  // owning sentence (global id)
    std::string predicate; // never empty
    std::map<Role, std::string> args;
    bool complete = false;
    bool synthetic = false;  // sentence-as-frame placeholder, always incomplete

    bool has(Role role) const { return args.count(role) > 0; }
    const std::string* arg(Role role) const {
        auto it = args.find(role);
        return it == args.end() ? nullptr : &it->second;
    }
};

/// complete <=> predicate present, at least one of {A0, A1} present, and
/// at least two arguments overall.
bool classify_completeness(const Frame& frame);

struct FrameLoadResult {
    std::vector<Frame> frames;          // ids dense, in file order
    std::vector<std::string> warnings;  // rejected records
};

/// Read tab-separated annotation records:
///   doc_index <TAB> sentence_index <TAB> predicate <TAB> role=text ...
/// sentence_index counts within the document. Unknown role labels reject
/// the record with a warning; an unresolvable sentence reference throws
/// InputError naming the record number.
FrameLoadResult load_frames(const std::filesystem::path& annotation_file, const Corpus& corpus);

/// Closed verb list driving the heuristic extractor. Matches base forms
/// plus their regular -s/-ed/-ing inflections.
class VerbLexicon {
public:
    static const VerbLexicon& bundled();
    static VerbLexicon from_words(const std::vector<std::string>& base_forms);
    static VerbLexicon from_file(const std::filesystem::path& file);

    bool is_verb(std::string_view lowercased) const;
    bool empty() const { return forms_.empty(); }

private:
    std::set<std::string, std::less<>> forms_;
};

/// Rule-based fallback when no annotation file is supplied: one frame per
/// lexicon verb; A0/A1 from the noun chunks flanking the predicate, AM-TMP
/// and AM-LOC from closed-class cue words. Pure function of its inputs;
/// frame ids are left unassigned (-1).
std::vector<Frame> extract_frames_heuristic(const Sentence& sentence, const VerbLexicon& lexicon);

/// Heuristic extraction over a whole corpus, ids assigned densely in
/// (sentence, predicate position) order.
std::vector<Frame> extract_frames(const Corpus& corpus, const VerbLexicon& lexicon);

/// Append one synthetic frame (predicate = head verb or first token,
/// A0 = whole sentence, always incomplete) for every sentence that has no
/// frame yet, so frame-score summation can reach every sentence.
std::vector<Frame> cover_sentences(const Corpus& corpus, std::vector<Frame> frames,
                                   const VerbLexicon& lexicon);

} // namespace mlsum

#endif
