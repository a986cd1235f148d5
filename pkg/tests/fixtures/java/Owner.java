package garage;

public class Owner {
    private String name;
    private long[] ids = new long[4];
    private char initial = 'O';

    public Owner(String name) {
        this.name = name;
    }

    public String getName() {
        return name; // plain field access
    }

    public int getInteger(String text) {
        int value = Integer.parseInt(text), radix = 10;
        return value * radix;
    }
}
