#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace finsphere::orchestrator {

/// Raw embedded resource text by file name; throws NotFoundError for
/// unknown names.
std::string_view embedded_resource(std::string_view name);
std::vector<std::string> embedded_resource_names();

/// One few-shot prompt example: a background document plus the report
/// written from it.
struct FewShotExample {
    std::string background;
    std::string report;
};

/// Parsed view over the bundled analysis resources (prompt texts, phrase
/// lists, dimension lexicon, few-shot samples). Defaults come from the
/// embedded copies; with_overrides() lets files in a directory replace
/// individual resources without rebuilding.
class ResourceSet {
public:
    /// Embedded defaults only.
    ResourceSet();
    /// Missing files fall back to the embedded copies.
    static ResourceSet with_overrides(const std::string& dir);

    const std::string& response_standards() const { return response_standards_; }
    const std::string& writing_guidelines() const { return writing_guidelines_; }
    const std::string& system_instruction() const { return system_instruction_; }
    const std::vector<std::string>& forbidden_phrases() const { return forbidden_; }
    const std::vector<std::string>& transition_words() const { return transitions_; }
    const std::vector<std::string>& bullish_keywords() const { return bullish_; }
    const std::vector<std::string>& bearish_keywords() const { return bearish_; }
    /// dimension name -> keyword list, in lexicon file order.
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
    dimension_lexicon() const {
        return lexicon_;
    }
    const std::vector<FewShotExample>& fewshot_examples() const { return fewshots_; }

private:
    void load(const std::string& override_dir);

    std::string response_standards_;
    std::string writing_guidelines_;
    std::string system_instruction_;
    std::vector<std::string> forbidden_;
    std::vector<std::string> transitions_;
    std::vector<std::string> bullish_;
    std::vector<std::string> bearish_;
    std::vector<std::pair<std::string, std::vector<std::string>>> lexicon_;
    std::vector<FewShotExample> fewshots_;
};

}  // namespace finsphere::orchestrator
