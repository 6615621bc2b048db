#include "finsphere/market/store.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>

#include "finsphere/common/csv.hpp"
#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"
#include "finsphere/indicators/indicators.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

namespace finsphere::market {

namespace fs = std::filesystem;
using nlohmann::json;

RecordKind record_kind_from(const std::string& name) {
    if (name == "instruments") return RecordKind::instruments;
    if (name == "bars") return RecordKind::bars;
    if (name == "fundamentals") return RecordKind::fundamentals;
    if (name == "flows") return RecordKind::flows;
    if (name == "sectors") return RecordKind::sectors;
    if (name == "news") return RecordKind::news;
    throw ValidationError("unknown record kind '" + name + "'");
}

std::string to_string(RecordKind kind) {
    switch (kind) {
        case RecordKind::instruments: return "instruments";
        case RecordKind::bars: return "bars";
        case RecordKind::fundamentals: return "fundamentals";
        case RecordKind::flows: return "flows";
        case RecordKind::sectors: return "sectors";
        case RecordKind::news: return "news";
    }
    return "?";
}

RankMetric rank_metric_from(const std::string& name) {
    if (name == "pct_change") return RankMetric::pct_change;
    if (name == "turnover_rate") return RankMetric::turnover_rate;
    if (name == "volume") return RankMetric::volume;
    if (name == "turnover_value") return RankMetric::turnover_value;
    throw ValidationError("unknown rank metric '" + name + "'");
}

std::string to_string(RankMetric metric) {
    switch (metric) {
        case RankMetric::pct_change: return "pct_change";
        case RankMetric::turnover_rate: return "turnover_rate";
        case RankMetric::volume: return "volume";
        case RankMetric::turnover_value: return "turnover_value";
    }
    return "?";
}

std::optional<int> Ranking::rank_of(const std::string& ticker) const {
    for (const auto& e : entries)
        if (e.ticker == ticker) return e.rank;
    return std::nullopt;
}

namespace {

/// Replace-or-insert into a date-ordered vector keyed by `key_of`.
template <typename T, typename KeyFn>
void upsert_sorted(std::vector<T>& records, T record, KeyFn key_of) {
    const auto key = key_of(record);
    auto it = std::lower_bound(records.begin(), records.end(), key,
                               [&](const T& r, const auto& k) { return key_of(r) < k; });
    if (it != records.end() && key_of(*it) == key)
        *it = std::move(record);
    else
        records.insert(it, std::move(record));
}

Date parse_date_field(const csv::Row& row, std::size_t idx, std::string_view name) {
    try {
        return Date::parse(row.fields.at(idx));
    } catch (const ParseError& e) {
        throw ParseError("field '" + std::string(name) + "': " + e.what(), row.line);
    }
}

}  // namespace

std::size_t MarketStore::ingest(const std::string& path, RecordKind kind) {
    std::unique_lock lock(mutex_);
    switch (kind) {
        case RecordKind::instruments: return ingest_instruments(path);
        case RecordKind::bars: return ingest_bars(path);
        case RecordKind::fundamentals: return ingest_fundamentals(path);
        case RecordKind::flows: return ingest_flows(path);
        case RecordKind::sectors: return ingest_sectors(path);
        case RecordKind::news: return ingest_news(path);
    }
    return 0;
}

std::size_t MarketStore::load_directory(const std::string& dir) {
    static constexpr std::pair<const char*, RecordKind> kFiles[] = {
        {"instruments.csv", RecordKind::instruments},
        {"sectors.csv", RecordKind::sectors},
        {"bars.csv", RecordKind::bars},
        {"fundamentals.csv", RecordKind::fundamentals},
        {"flows.csv", RecordKind::flows},
        {"news.jsonl", RecordKind::news},
    };
    if (!fs::is_directory(dir))
        throw NotFoundError("store directory '" + dir + "' does not exist");
    std::size_t total = 0;
    bool any = false;
    for (const auto& [name, kind] : kFiles) {
        const fs::path p = fs::path(dir) / name;
        if (fs::exists(p)) {
            total += ingest(p.string(), kind);
            any = true;
        }
    }
    if (!any)
        throw NotFoundError("store directory '" + dir + "' contains no recognized files");
    return total;
}

std::size_t MarketStore::ingest_instruments(const std::string& path) {
    auto rows = csv::read_file(path, {"ticker", "name", "aliases", "sector_id",
                                      "float_shares"});
    for (const auto& row : rows) {
        Instrument inst;
        inst.ticker = row.fields[0];
        inst.name = row.fields[1];
        inst.sector_id = row.fields[3];
        inst.float_shares = csv::parse_double(row, 4, "float_shares");
        if (inst.ticker.empty()) throw ParseError("field 'ticker': empty", row.line);
        if (inst.name.empty()) throw ParseError("field 'name': empty", row.line);
        if (inst.float_shares <= 0)
            throw ParseError("field 'float_shares': must be > 0", row.line);
        std::string alias;
        for (char c : row.fields[2]) {
            if (c == '|') {
                if (!alias.empty()) inst.aliases.push_back(alias);
                alias.clear();
            } else {
                alias.push_back(c);
            }
        }
        if (!alias.empty()) inst.aliases.push_back(alias);
        auto it = instruments_.find(inst.ticker);
        if (it == instruments_.end()) {
            InstrumentData data;
            data.meta = std::move(inst);
            instruments_.emplace(data.meta.ticker, std::move(data));
        } else {
            it->second.meta = std::move(inst);
        }
    }
    return rows.size();
}

std::size_t MarketStore::ingest_bars(const std::string& path) {
    auto rows = csv::read_file(
        path, {"ticker", "date", "open", "high", "low", "close", "volume",
               "turnover_value", "lo_buy_vol", "lo_sell_vol"});
    for (const auto& row : rows) {
        auto it = instruments_.find(row.fields[0]);
        if (it == instruments_.end())
            throw ParseError("unknown ticker '" + row.fields[0] + "'", row.line);
        DailyBar bar;
        bar.date = parse_date_field(row, 1, "date");
        bar.open = csv::parse_double(row, 2, "open");
        bar.high = csv::parse_double(row, 3, "high");
        bar.low = csv::parse_double(row, 4, "low");
        bar.close = csv::parse_double(row, 5, "close");
        bar.volume = csv::parse_double(row, 6, "volume");
        bar.turnover_value = csv::parse_double(row, 7, "turnover_value");
        bar.large_order_buy_volume = csv::parse_double(row, 8, "lo_buy_vol");
        bar.large_order_sell_volume = csv::parse_double(row, 9, "lo_sell_vol");
        if (bar.open <= 0 || bar.high <= 0 || bar.low <= 0 || bar.close <= 0)
            throw ParseError("field 'open/high/low/close': prices must be > 0", row.line);
        if (bar.low > std::min(bar.open, bar.close))
            throw ParseError("field 'low': exceeds min(open, close)", row.line);
        if (bar.high < std::max(bar.open, bar.close))
            throw ParseError("field 'high': below max(open, close)", row.line);
        if (bar.volume < 0 || bar.turnover_value < 0 ||
            bar.large_order_buy_volume < 0 || bar.large_order_sell_volume < 0)
            throw ParseError("field 'volume/turnover_value/lo_*': must be >= 0", row.line);
        upsert_sorted(it->second.bars, bar, [](const DailyBar& b) { return b.date; });
    }
    return rows.size();
}

std::size_t MarketStore::ingest_fundamentals(const std::string& path) {
    auto rows = csv::read_file(
        path, {"ticker", "period_end", "revenue", "revenue_yoy", "net_profit",
               "net_profit_yoy", "non_recurring_net_profit", "eps", "roe", "net_margin",
               "gross_margin", "pe", "pb", "current_ratio", "quick_ratio", "debt_to_asset",
               "fee_commission_ratio"});
    for (const auto& row : rows) {
        auto it = instruments_.find(row.fields[0]);
        if (it == instruments_.end())
            throw ParseError("unknown ticker '" + row.fields[0] + "'", row.line);
        FundamentalsRecord rec;
        rec.period_end = parse_date_field(row, 1, "period_end");
        rec.revenue = csv::parse_double(row, 2, "revenue");
        rec.revenue_yoy = csv::parse_double(row, 3, "revenue_yoy");
        rec.net_profit = csv::parse_double(row, 4, "net_profit");
        rec.net_profit_yoy = csv::parse_double(row, 5, "net_profit_yoy");
        rec.non_recurring_net_profit = csv::parse_double(row, 6, "non_recurring_net_profit");
        rec.eps = csv::parse_double(row, 7, "eps");
        rec.roe = csv::parse_double(row, 8, "roe");
        rec.net_margin = csv::parse_double(row, 9, "net_margin");
        rec.gross_margin = csv::parse_double(row, 10, "gross_margin");
        rec.pe = csv::parse_double(row, 11, "pe");
        rec.pb = csv::parse_double(row, 12, "pb");
        rec.current_ratio = csv::parse_double(row, 13, "current_ratio");
        rec.quick_ratio = csv::parse_double(row, 14, "quick_ratio");
        rec.debt_to_asset = csv::parse_double(row, 15, "debt_to_asset");
        rec.fee_commission_ratio = csv::parse_double(row, 16, "fee_commission_ratio");
        upsert_sorted(it->second.fundamentals, rec,
                      [](const FundamentalsRecord& r) { return r.period_end; });
    }
    return rows.size();
}

std::size_t MarketStore::ingest_flows(const std::string& path) {
    auto rows = csv::read_file(path, {"ticker", "date", "ddx_daily", "margin_balance",
                                      "margin_net_inflow", "institutional_holding_pct",
                                      "holding_qoq_change"});
    for (const auto& row : rows) {
        auto it = instruments_.find(row.fields[0]);
        if (it == instruments_.end())
            throw ParseError("unknown ticker '" + row.fields[0] + "'", row.line);
        CapitalFlowRecord rec;
        rec.date = parse_date_field(row, 1, "date");
        rec.ddx_daily = csv::parse_double(row, 2, "ddx_daily");
        rec.margin_balance = csv::parse_double(row, 3, "margin_balance");
        rec.margin_net_inflow = csv::parse_double(row, 4, "margin_net_inflow");
        rec.institutional_holding_pct = csv::parse_double(row, 5, "institutional_holding_pct");
        rec.holding_qoq_change = csv::parse_double(row, 6, "holding_qoq_change");
        upsert_sorted(it->second.flows, rec,
                      [](const CapitalFlowRecord& r) { return r.date; });
    }
    return rows.size();
}

std::size_t MarketStore::ingest_sectors(const std::string& path) {
    auto rows = csv::read_file(path, {"sector_id", "date", "index_level", "pct_change",
                                      "day_high", "day_low", "total_trading_value"});
    for (const auto& row : rows) {
        SectorSnapshot snap;
        snap.sector_id = row.fields[0];
        snap.date = parse_date_field(row, 1, "date");
        snap.index_level = csv::parse_double(row, 2, "index_level");
        snap.pct_change = csv::parse_double(row, 3, "pct_change");
        snap.day_high = csv::parse_double(row, 4, "day_high");
        snap.day_low = csv::parse_double(row, 5, "day_low");
        snap.total_trading_value = csv::parse_double(row, 6, "total_trading_value");
        if (snap.sector_id.empty()) throw ParseError("field 'sector_id': empty", row.line);
        if (snap.day_low > snap.day_high)
            throw ParseError("field 'day_low': exceeds day_high", row.line);
        upsert_sorted(sectors_[snap.sector_id], snap,
                      [](const SectorSnapshot& s) { return s.date; });
    }
    return rows.size();
}

std::size_t MarketStore::ingest_news(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::string line;
    int line_no = 0;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string trimmed = text::trim(line);
        if (trimmed.empty()) continue;
        json obj;
        try {
            obj = json::parse(trimmed);
        } catch (const json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
        }
        if (!obj.contains("ticker") || !obj["ticker"].is_string())
            throw ParseError("field 'ticker': missing or not a string", line_no);
        auto it = instruments_.find(obj["ticker"].get<std::string>());
        if (it == instruments_.end())
            throw ParseError("unknown ticker '" + obj["ticker"].get<std::string>() + "'",
                             line_no);
        NewsItem item;
        if (!obj.contains("timestamp") || !obj["timestamp"].is_string())
            throw ParseError("field 'timestamp': missing or not a string", line_no);
        try {
            item.timestamp = Instant::parse(obj["timestamp"].get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(std::string("field 'timestamp': ") + e.what(), line_no);
        }
        if (!obj.contains("headline") || !obj["headline"].is_string() ||
            obj["headline"].get<std::string>().empty())
            throw ParseError("field 'headline': missing or empty", line_no);
        item.headline = obj["headline"].get<std::string>();
        item.body = obj.value("body", std::string());
        if (obj.contains("tags")) {
            if (!obj["tags"].is_array())
                throw ParseError("field 'tags': must be an array", line_no);
            for (const auto& t : obj["tags"]) item.tags.push_back(t.get<std::string>());
        }
        auto& news = it->second.news;
        news.push_back(std::move(item));
        std::stable_sort(news.begin(), news.end(),
                         [](const NewsItem& a, const NewsItem& b) {
                             return a.timestamp < b.timestamp;
                         });
        ++count;
    }
    return count;
}

const MarketStore::InstrumentData& MarketStore::require(const std::string& ticker) const {
    auto it = instruments_.find(ticker);
    if (it == instruments_.end())
        throw NotFoundError("unknown ticker '" + ticker + "'");
    return it->second;
}

MarketSnapshot MarketStore::snapshot(const std::string& ticker, Instant as_of) const {
    std::shared_lock lock(mutex_);
    const InstrumentData& data = require(ticker);

    MarketSnapshot snap;
    snap.instrument = data.meta;
    snap.as_of = as_of;

    // Trailing bar window, newest session at or before as_of.
    auto bar_end = std::partition_point(
        data.bars.begin(), data.bars.end(),
        [&](const DailyBar& b) { return b.visible_at() <= as_of; });
    if (bar_end == data.bars.begin())
        throw EmptyHistoryError("no bars for '" + ticker + "' at or before " +
                                as_of.to_string());
    auto bar_begin = bar_end - std::min<std::ptrdiff_t>(
                                   bar_end - data.bars.begin(),
                                   static_cast<std::ptrdiff_t>(kBarsWindow));
    snap.bars.assign(bar_begin, bar_end);
    const Date session = snap.bars.back().date;

    auto fund_end = std::partition_point(
        data.fundamentals.begin(), data.fundamentals.end(),
        [&](const FundamentalsRecord& r) { return r.visible_at() <= as_of; });
    if (fund_end != data.fundamentals.begin()) {
        snap.fundamentals = *(fund_end - 1);
        if (fund_end - 1 != data.fundamentals.begin())
            snap.previous_fundamentals = *(fund_end - 2);
    }

    auto flow_end = std::partition_point(
        data.flows.begin(), data.flows.end(),
        [&](const CapitalFlowRecord& r) { return r.visible_at() <= as_of; });
    auto flow_begin = flow_end - std::min<std::ptrdiff_t>(
                                     flow_end - data.flows.begin(),
                                     static_cast<std::ptrdiff_t>(kBarsWindow));
    snap.flows.assign(flow_begin, flow_end);

    for (const auto& item : data.news)
        if (item.timestamp <= as_of) snap.news.push_back(item);

    auto latest_sector = [&](const std::string& id) -> std::optional<SectorSnapshot> {
        auto sit = sectors_.find(id);
        if (sit == sectors_.end()) return std::nullopt;
        auto end = std::partition_point(
            sit->second.begin(), sit->second.end(),
            [&](const SectorSnapshot& s) { return s.visible_at() <= as_of; });
        if (end == sit->second.begin()) return std::nullopt;
        return *(end - 1);
    };
    snap.sector = latest_sector(data.meta.sector_id);
    snap.market_index = latest_sector(kMarketSectorId);

    // Universe metrics on the snapshot's own session date.
    for (const auto& [peer_ticker, peer] : instruments_) {
        PeerMetric m;
        m.ticker = peer_ticker;
        m.name = peer.meta.name;
        m.sector_id = peer.meta.sector_id;
        auto it = std::partition_point(
            peer.bars.begin(), peer.bars.end(),
            [&](const DailyBar& b) { return b.date < session; });
        if (it != peer.bars.end() && it->date == session &&
            it->visible_at() <= as_of) {
            m.volume = it->volume;
            m.turnover_value = it->turnover_value;
            m.turnover_rate =
                indicators::turnover_rate(it->volume, peer.meta.float_shares);
            if (it != peer.bars.begin()) {
                const double prev_close = (it - 1)->close;
                if (prev_close > 0)
                    m.pct_change = 100.0 * (it->close - prev_close) / prev_close;
            }
        }
        auto fit = std::partition_point(
            peer.fundamentals.begin(), peer.fundamentals.end(),
            [&](const FundamentalsRecord& r) { return r.visible_at() <= as_of; });
        if (fit != peer.fundamentals.begin()) {
            m.pe = (fit - 1)->pe;
            m.pb = (fit - 1)->pb;
        }
        snap.peers.push_back(std::move(m));
    }
    return snap;
}

std::optional<double> MarketStore::metric_value(const InstrumentData& data,
                                                RankMetric metric, Date session) const {
    auto it = std::partition_point(data.bars.begin(), data.bars.end(),
                                   [&](const DailyBar& b) { return b.date < session; });
    if (it == data.bars.end() || it->date != session) return std::nullopt;
    switch (metric) {
        case RankMetric::volume:
            return it->volume;
        case RankMetric::turnover_value:
            return it->turnover_value;
        case RankMetric::turnover_rate:
            return indicators::turnover_rate(it->volume, data.meta.float_shares);
        case RankMetric::pct_change: {
            if (it == data.bars.begin()) return std::nullopt;
            const double prev_close = (it - 1)->close;
            if (prev_close <= 0) return std::nullopt;
            return 100.0 * (it->close - prev_close) / prev_close;
        }
    }
    return std::nullopt;
}

Ranking MarketStore::rank_in_universe(RankMetric metric, RankScope scope, Instant as_of,
                                      const std::string& sector_id) const {
    std::shared_lock lock(mutex_);
    if (scope == RankScope::sector && sector_id.empty())
        throw ValidationError("sector-scoped ranking requires a sector_id");

    // Ranking session: latest bar date visible at as_of within scope.
    std::optional<Date> session;
    for (const auto& [ticker, data] : instruments_) {
        if (scope == RankScope::sector && data.meta.sector_id != sector_id) continue;
        for (auto it = data.bars.rbegin(); it != data.bars.rend(); ++it) {
            if (it->visible_at() <= as_of) {
                if (!session || it->date > *session) session = it->date;
                break;
            }
        }
    }
    if (!session)
        throw EmptyHistoryError("no instrument has data at or before " + as_of.to_string());

    Ranking result;
    result.metric = metric;
    result.scope = scope;
    result.session = *session;
    for (const auto& [ticker, data] : instruments_) {
        if (scope == RankScope::sector && data.meta.sector_id != sector_id) continue;
        if (auto v = metric_value(data, metric, *session))
            result.entries.push_back({ticker, *v, 0});
        else
            result.excluded.push_back(ticker);
    }
    std::sort(result.entries.begin(), result.entries.end(),
              [](const RankEntry& a, const RankEntry& b) {
                  if (a.value != b.value) return a.value > b.value;
                  return a.ticker < b.ticker;
              });
    // Competition ranking: ties share the smaller rank.
    for (std::size_t i = 0; i < result.entries.size(); ++i) {
        if (i > 0 && result.entries[i].value == result.entries[i - 1].value)
            result.entries[i].rank = result.entries[i - 1].rank;
        else
            result.entries[i].rank = static_cast<int>(i + 1);
    }
    return result;
}

std::vector<std::string> MarketStore::tickers() const {
    std::shared_lock lock(mutex_);
    std::vector<std::string> out;
    out.reserve(instruments_.size());
    for (const auto& [ticker, _] : instruments_) out.push_back(ticker);
    return out;
}

std::optional<Instrument> MarketStore::instrument(const std::string& ticker) const {
    std::shared_lock lock(mutex_);
    auto it = instruments_.find(ticker);
    if (it == instruments_.end()) return std::nullopt;
    return it->second.meta;
}

std::vector<DailyBar> MarketStore::bars(const std::string& ticker) const {
    std::shared_lock lock(mutex_);
    return require(ticker).bars;
}

std::vector<FundamentalsRecord> MarketStore::fundamentals(const std::string& ticker) const {
    std::shared_lock lock(mutex_);
    return require(ticker).fundamentals;
}

std::vector<CapitalFlowRecord> MarketStore::flows(const std::string& ticker) const {
    std::shared_lock lock(mutex_);
    return require(ticker).flows;
}

std::vector<NewsItem> MarketStore::news(const std::string& ticker) const {
    std::shared_lock lock(mutex_);
    return require(ticker).news;
}

std::vector<SectorSnapshot> MarketStore::sector_history(const std::string& sector_id) const {
    std::shared_lock lock(mutex_);
    auto it = sectors_.find(sector_id);
    return it == sectors_.end() ? std::vector<SectorSnapshot>{} : it->second;
}

std::optional<Date> MarketStore::latest_session() const {
    std::shared_lock lock(mutex_);
    std::optional<Date> latest;
    for (const auto& [_, data] : instruments_)
        if (!data.bars.empty() && (!latest || data.bars.back().date > *latest))
            latest = data.bars.back().date;
    return latest;
}

StoreStats MarketStore::stats() const {
    std::shared_lock lock(mutex_);
    StoreStats s;
    s.instruments = instruments_.size();
    for (const auto& [_, data] : instruments_) {
        s.bars += data.bars.size();
        s.fundamentals += data.fundamentals.size();
        s.flows += data.flows.size();
        s.news += data.news.size();
    }
    for (const auto& [_, snaps] : sectors_) s.sector_snapshots += snaps.size();
    return s;
}

void MarketStore::save_directory(const std::string& dir) const {
    std::shared_lock lock(mutex_);
    fs::create_directories(dir);
    auto open_out = [&](const char* name) {
        std::ofstream out(fs::path(dir) / name);
        if (!out) throw Error(std::string("cannot write ") + name + " under " + dir);
        return out;
    };

    {
        auto out = open_out("instruments.csv");
        out << "ticker,name,aliases,sector_id,float_shares\n";
        for (const auto& [ticker, data] : instruments_) {
            std::string aliases;
            for (std::size_t i = 0; i < data.meta.aliases.size(); ++i) {
                if (i) aliases.push_back('|');
                aliases += data.meta.aliases[i];
            }
            out << csv::join({ticker, data.meta.name, aliases, data.meta.sector_id,
                              text::format_number(data.meta.float_shares)})
                << "\n";
        }
    }
    {
        auto out = open_out("bars.csv");
        out << "ticker,date,open,high,low,close,volume,turnover_value,lo_buy_vol,lo_sell_vol\n";
        for (const auto& [ticker, data] : instruments_)
            for (const auto& b : data.bars)
                out << csv::join({ticker, b.date.to_string(), text::format_number(b.open),
                                  text::format_number(b.high), text::format_number(b.low),
                                  text::format_number(b.close),
                                  text::format_number(b.volume),
                                  text::format_number(b.turnover_value),
                                  text::format_number(b.large_order_buy_volume),
                                  text::format_number(b.large_order_sell_volume)})
                    << "\n";
    }
    {
        auto out = open_out("fundamentals.csv");
        out << "ticker,period_end,revenue,revenue_yoy,net_profit,net_profit_yoy,"
               "non_recurring_net_profit,eps,roe,net_margin,gross_margin,pe,pb,"
               "current_ratio,quick_ratio,debt_to_asset,fee_commission_ratio\n";
        for (const auto& [ticker, data] : instruments_)
            for (const auto& r : data.fundamentals)
                out << csv::join(
                           {ticker, r.period_end.to_string(),
                            text::format_number(r.revenue),
                            text::format_number(r.revenue_yoy),
                            text::format_number(r.net_profit),
                            text::format_number(r.net_profit_yoy),
                            text::format_number(r.non_recurring_net_profit),
                            text::format_number(r.eps), text::format_number(r.roe),
                            text::format_number(r.net_margin),
                            text::format_number(r.gross_margin), text::format_number(r.pe),
                            text::format_number(r.pb), text::format_number(r.current_ratio),
                            text::format_number(r.quick_ratio),
                            text::format_number(r.debt_to_asset),
                            text::format_number(r.fee_commission_ratio)})
                    << "\n";
    }
    {
        auto out = open_out("flows.csv");
        out << "ticker,date,ddx_daily,margin_balance,margin_net_inflow,"
               "institutional_holding_pct,holding_qoq_change\n";
        for (const auto& [ticker, data] : instruments_)
            for (const auto& r : data.flows)
                out << csv::join({ticker, r.date.to_string(),
                                  text::format_number(r.ddx_daily),
                                  text::format_number(r.margin_balance),
                                  text::format_number(r.margin_net_inflow),
                                  text::format_number(r.institutional_holding_pct),
                                  text::format_number(r.holding_qoq_change)})
                    << "\n";
    }
    {
        auto out = open_out("sectors.csv");
        out << "sector_id,date,index_level,pct_change,day_high,day_low,total_trading_value\n";
        for (const auto& [sector_id, snaps] : sectors_)
            for (const auto& s : snaps)
                out << csv::join({sector_id, s.date.to_string(),
                                  text::format_number(s.index_level),
                                  text::format_number(s.pct_change),
                                  text::format_number(s.day_high),
                                  text::format_number(s.day_low),
                                  text::format_number(s.total_trading_value)})
                    << "\n";
    }
    {
        auto out = open_out("news.jsonl");
        for (const auto& [ticker, data] : instruments_)
            for (const auto& n : data.news) {
                json obj;
                obj["ticker"] = ticker;
                obj["timestamp"] = n.timestamp.to_string();
                obj["headline"] = n.headline;
                obj["body"] = n.body;
                obj["tags"] = n.tags;
                out << obj.dump() << "\n";
            }
    }
}

}  // namespace finsphere::market
