package garage;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Fleet<T extends Comparable<T>> implements Runnable {
    private Map<String, List<Integer>> index = new HashMap<>();
    private Owner owner;
    private double total = 1.5e3, rate = .25;

    @Override
    public void run() {
        for (String key : index.keySet()) {
            List<Integer> entries = index.get(key);
            total += entries.size();
        }
    }

    static <X> X first(List<X> items) {
        return items.get(0);
    }

    public Owner getOwner() {
        return owner;
    }
}
