#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "finsphere/market/types.hpp"

namespace finsphere::market {

enum class RecordKind { instruments, bars, fundamentals, flows, sectors, news };

RecordKind record_kind_from(const std::string& name);
std::string to_string(RecordKind kind);

enum class RankMetric { pct_change, turnover_rate, volume, turnover_value };
enum class RankScope { market, sector };

RankMetric rank_metric_from(const std::string& name);
std::string to_string(RankMetric metric);

struct RankEntry {
    std::string ticker;
    double value = 0.0;
    int rank = 0;  // 1-based competition rank
};

struct Ranking {
    RankMetric metric = RankMetric::pct_change;
    RankScope scope = RankScope::market;
    Date session;                       // session the values were taken on
    std::vector<RankEntry> entries;     // descending by value
    std::vector<std::string> excluded;  // instruments missing the metric

    std::optional<int> rank_of(const std::string& ticker) const;
};

struct StoreStats {
    std::size_t instruments = 0;
    std::size_t bars = 0;
    std::size_t fundamentals = 0;
    std::size_t flows = 0;
    std::size_t news = 0;
    std::size_t sector_snapshots = 0;
};

/// In-memory, file-fed time-indexed store. Readers share; ingestion takes
/// exclusive access per batch. Snapshots are immutable values.
///
/// The whole-market index series is kept under the reserved sector id
/// `MARKET`.
class MarketStore {
public:
    static constexpr const char* kMarketSectorId = "MARKET";
    /// Trailing sessions kept in a snapshot: covers the 26-period MACD slow
    /// EMA plus its 9-session signal line with warm-up to spare.
    static constexpr std::size_t kBarsWindow = 60;

    /// Merges one file into the store; duplicate (instrument, date) keys
    /// replace prior values. Returns the number of data rows ingested.
    std::size_t ingest(const std::string& path, RecordKind kind);

    /// Ingests every recognized file in a directory (instruments.csv,
    /// bars.csv, fundamentals.csv, flows.csv, sectors.csv, news.jsonl).
    std::size_t load_directory(const std::string& dir);

    /// Writes the store back out in the ingestion formats.
    void save_directory(const std::string& dir) const;

    /// Frozen view of one instrument at `as_of`; no contained record
    /// postdates it.
    MarketSnapshot snapshot(const std::string& ticker, Instant as_of) const;

    /// Descending competition ranking over the requested scope, taken on the
    /// latest session at or before `as_of`. Instruments without the metric on
    /// that session are excluded and listed in the result.
    Ranking rank_in_universe(RankMetric metric, RankScope scope, Instant as_of,
                             const std::string& sector_id = {}) const;

    // Read accessors (copies; the store stays lock-free for callers).
    std::vector<std::string> tickers() const;
    std::optional<Instrument> instrument(const std::string& ticker) const;
    std::vector<DailyBar> bars(const std::string& ticker) const;
    std::vector<FundamentalsRecord> fundamentals(const std::string& ticker) const;
    std::vector<CapitalFlowRecord> flows(const std::string& ticker) const;
    std::vector<NewsItem> news(const std::string& ticker) const;
    std::vector<SectorSnapshot> sector_history(const std::string& sector_id) const;

    /// Latest bar date across all instruments; empty store -> nullopt.
    std::optional<Date> latest_session() const;
    StoreStats stats() const;

private:
    struct InstrumentData {
        Instrument meta;
        std::vector<DailyBar> bars;                  // ascending by date
        std::vector<FundamentalsRecord> fundamentals;  // ascending by period_end
        std::vector<CapitalFlowRecord> flows;        // ascending by date
        std::vector<NewsItem> news;                  // ascending by timestamp
    };

    std::size_t ingest_instruments(const std::string& path);
    std::size_t ingest_bars(const std::string& path);
    std::size_t ingest_fundamentals(const std::string& path);
    std::size_t ingest_flows(const std::string& path);
    std::size_t ingest_sectors(const std::string& path);
    std::size_t ingest_news(const std::string& path);

    const InstrumentData& require(const std::string& ticker) const;
    std::optional<double> metric_value(const InstrumentData& data, RankMetric metric,
                                       Date session) const;

    mutable std::shared_mutex mutex_;
    std::map<std::string, InstrumentData> instruments_;
    std::map<std::string, std::vector<SectorSnapshot>> sectors_;  // ascending by date
};

}  // namespace finsphere::market
