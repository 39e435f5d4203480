#include "itinopt/bus.hpp"

namespace itinopt {

MessageBus::MessageBus(Options options) : options_(options) {
    worker_ = std::thread([this] { dispatch_loop(); });
}

MessageBus::~MessageBus() { close(); }

uint64_t MessageBus::subscribe(const std::string& topic, Handler handler) {
    if (topic.empty()) throw Error(Errc::invalid_argument, "topic must be non-empty");
    std::lock_guard lock(mutex_);
    if (closed_) throw Error(Errc::topic_closed, "bus is closed");
    uint64_t id = next_subscription_++;
    subscribers_[topic].emplace_back(id, std::move(handler));
    return id;
}

void MessageBus::unsubscribe(uint64_t subscription_id) {
    std::lock_guard lock(mutex_);
    for (auto& [topic, subs] : subscribers_) {
        std::erase_if(subs, [&](const auto& entry) { return entry.first == subscription_id; });
    }
}

uint64_t MessageBus::publish(const std::string& topic, const std::string& publisher,
                             const std::string& request_id, std::string payload) {
    if (topic.empty()) throw Error(Errc::invalid_argument, "topic must be non-empty");
    std::lock_guard lock(mutex_);
    if (closed_) throw Error(Errc::topic_closed, "publish on closed bus (topic '" + topic + "')");
    uint64_t seq = ++sequences_[{publisher, topic}];
    queue_.push_back(BusEvent{topic, publisher, request_id, std::move(payload), seq});
    ++published_;
    cv_.notify_one();
    return seq;
}

void MessageBus::close() {
    {
        std::unique_lock lock(mutex_);
        if (closed_) {
            lock.unlock();
            if (worker_.joinable()) worker_.join();
            return;
        }
        // Let the dispatcher drain what was published before the close.
        idle_cv_.wait(lock, [this] { return queue_.empty() && !dispatching_; });
        closed_ = true;
        cv_.notify_all();
    }
    if (worker_.joinable()) worker_.join();
}

void MessageBus::flush() {
    std::unique_lock lock(mutex_);
    idle_cv_.wait(lock, [this] { return queue_.empty() && !dispatching_; });
}

size_t MessageBus::depth() const {
    std::lock_guard lock(mutex_);
    return queue_.size();
}

uint64_t MessageBus::published_total() const {
    std::lock_guard lock(mutex_);
    return published_;
}

uint64_t MessageBus::delivered_total() const {
    std::lock_guard lock(mutex_);
    return delivered_;
}

void MessageBus::dispatch_loop() {
    std::unique_lock lock(mutex_);
    while (true) {
        cv_.wait(lock, [this] { return closed_ || !queue_.empty(); });
        if (queue_.empty()) {
            if (closed_) return;
            continue;
        }
        BusEvent event = std::move(queue_.front());
        queue_.pop_front();
        dispatching_ = true;

        std::vector<Handler> handlers;
        if (auto it = subscribers_.find(event.topic); it != subscribers_.end()) {
            handlers.reserve(it->second.size());
            for (const auto& [id, handler] : it->second) handlers.push_back(handler);
        }

        lock.unlock();
        if (options_.delivery_delay.count() > 0) {
            std::this_thread::sleep_for(options_.delivery_delay);
        }
        int rounds = options_.duplicate_deliveries ? 2 : 1;
        for (int r = 0; r < rounds; ++r) {
            for (const Handler& handler : handlers) {
                handler(event);
            }
        }
        lock.lock();
        delivered_ += static_cast<uint64_t>(handlers.size()) * static_cast<uint64_t>(rounds);
        dispatching_ = false;
        if (queue_.empty()) idle_cv_.notify_all();
    }
}

} // namespace itinopt
