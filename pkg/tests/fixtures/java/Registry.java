package registry;

import java.util.ArrayList;
import java.util.List;
import java.util.function.Function;

public class Registry {
    private List<Owner> owners = new ArrayList<>();
    private int size;

    public void add(Owner owner) {
        owners.add(owner);
        size++;
    }

    public List<String> names(Function<Owner, String> fn) {
        List<String> out = new ArrayList<>();
        owners.forEach(o -> out.add(fn.apply(o)));
        return out;
    }

    public boolean contains(Object candidate) {
        if (candidate instanceof Owner match) {
            return owners.contains(match);
        }
        return false;
    }

    static class Owner {
        String label;
    }
}
