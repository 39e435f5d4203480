#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "itinopt/errors.hpp"

namespace itinopt {

struct BusEvent {
    std::string topic;
    std::string publisher;
    std::string request_id;
    std::string payload;   // serialized body
    uint64_t sequence = 0; // strictly increasing per (publisher, topic)
};

// In-process publish/subscribe broker. Delivery is asynchronous (publish
// returns before handlers run) on a single dispatcher thread, which preserves
// per-publisher per-topic FIFO order. Delivery is at-least-once: handlers
// must be idempotent keyed on (request_id, sequence). The test options below
// inject duplicates and delays to exercise exactly that contract.
class MessageBus {
public:
    struct Options {
        std::chrono::milliseconds delivery_delay{0}; // applied before each dispatch
        bool duplicate_deliveries = false;           // deliver every event twice
    };

    using Handler = std::function<void(const BusEvent&)>;

    explicit MessageBus(Options options = {});
    ~MessageBus();

    MessageBus(const MessageBus&) = delete;
    MessageBus& operator=(const MessageBus&) = delete;

    // Returns a subscription id usable with unsubscribe.
    uint64_t subscribe(const std::string& topic, Handler handler);
    void unsubscribe(uint64_t subscription_id);

    // Enqueues the event and returns its per-(publisher, topic) sequence.
    // Throws Error(topic_closed) after close().
    uint64_t publish(const std::string& topic, const std::string& publisher,
                     const std::string& request_id, std::string payload);

    // Drains the queue, then stops the dispatcher. Idempotent.
    void close();

    // Blocks until every event published so far has been dispatched.
    void flush();

    size_t depth() const; // events queued and not yet dispatched
    uint64_t published_total() const;
    uint64_t delivered_total() const;

private:
    void dispatch_loop();

    Options options_;
    mutable std::mutex mutex_;
    std::condition_variable cv_;
    std::condition_variable idle_cv_;
    std::deque<BusEvent> queue_;
    std::map<std::string, std::vector<std::pair<uint64_t, Handler>>> subscribers_;
    std::map<std::pair<std::string, std::string>, uint64_t> sequences_;
    uint64_t next_subscription_ = 1;
    uint64_t published_ = 0;
    uint64_t delivered_ = 0;
    bool closed_ = false;
    bool dispatching_ = false;
    std::thread worker_;
};

} // namespace itinopt
