#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rtchan {

/// What a resource access yields. A non-2xx status forces word_count = 0,
/// the error sentinel both endpoints key on.
struct PageRecord {
    std::string url;
    std::size_t word_count = 0;
    int status = 200;
    bool body_available = false;
};

/// Count of "relevant" words in an HTML document: script/style elements,
/// tags and comments are dropped, the five basic named entities and numeric
/// entities are decoded, then maximal whitespace-separated tokens containing
/// at least one ASCII alphanumeric are counted. Total over arbitrary bytes;
/// an unclosed construct consumes to end of input.
std::size_t count_relevant_words(std::string_view html);

/// Page retrieval behind one interface so the channel logic never knows
/// whether pages come from a local corpus or a live client.
class Fetcher {
public:
    virtual ~Fetcher() = default;
    virtual PageRecord fetch(const std::string& url) = 0;
};

/// Local page store, loaded from a JSON Lines manifest or built in memory.
/// Unknown URLs fetch as 404 with zero words.
class Corpus : public Fetcher {
public:
    /// Manifest: one JSON object per line with "url" and either "file"
    /// (HTML path relative to the manifest) or "word_count", plus optional
    /// "status" (default 200). Files are read and counted at load time.
    static Corpus load(const std::string& manifest_path);

    void add(PageRecord record);

    PageRecord fetch(const std::string& url) override;

    std::size_t size() const { return entries_.size(); }

    /// Sorted by URL.
    const std::map<std::string, PageRecord>& entries() const { return entries_; }

private:
    std::map<std::string, PageRecord> entries_;
};

/// One URL per line, blank lines and '#' comments ignored.
std::vector<std::string> load_url_list(const std::string& path);

}  // namespace rtchan
