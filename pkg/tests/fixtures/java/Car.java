package garage;

import java.util.ArrayList;
import java.util.List;

/* A car owned by someone. */
public class Car {
    private int year;
    private boolean flag;
    private String name;
    private Owner owner;

    public Car(String name, int year) {
        this.name = name;
        this.year = year;
    }

    // accessor
    public int getYear() {
        return year;
    }

    public void drive(int[] distances) {
        for (int i = 0; i < distances.length; i++) {
            flag = distances[i] > year;
        }
        System.out.println("drive // not a comment " + getYear());
    }
}
