class S15 extends Abstract4 {
  void enter() {
    send("msg13");
    send("msg9");
    send("msg17");
  }
  void exit() {
    new S24();
    try {
      try {
        try {
          send("msg4");
          new S24();
        } catch (IllegalStateException e) {
          new S23();
          new S19();
          new S6();
        } finally {
          send("msg4");
          new S15();
          send("msg15");
          send("msg10");
        }
        new S14();
      } catch (TimeoutException e) {
        if (x9 > 0) {
          new S24();
          send("msg9");
        } else {
          new S21();
          new S25();
          new S24();
          log("note");
        }
        new State();
        new S5();
      } finally {
        try {
          new State();
          new S17();
          new S17();
        } catch (IOException e) {
          new S27();
        }
        new S24();
        if (x7 > 0) {
          new S26();
          send("msg10");
          new S1();
        }
        new S13();
      }
      new S12();
    } catch (IllegalStateException e) {
      if (x6 > 0) {
        switch (event) {
          case EV222:
            new S3();
            new S13();
            send("msg6");
            new S5();
            break;
          case EV223:
            send("msg3");
            new S28();
            new S24();
            break;
        }
      }
      try {
        if (x6 > 0) {
          send("msg2");
          new S17();
        } else {
          new S25();
          send("msg13");
        }
      } catch (IOException e) {
        try {
          new S19();
          new S22();
          new S10();
          new S8();
        } catch (TimeoutException e) {
          new S25();
        }
      } catch (IOException e) {
        send("msg7");
        new S4();
        log("note");
      }
    } finally {
      send("msg10");
      if (x4 > 0) {
        switch (event) {
          case EV224:
            new S1();
            log("note");
            new S1();
            new S17();
            break;
          case EV225:
            new S19();
            log("note");
            new S17();
            break;
          case EV226:
            send("msg2");
            new S12();
            new S16();
            break;
        }
        log("note");
      }
      send("msg0");
      new S18();
    }
    new S10();
    new S5();
  }
  public void handle() {
    new S11();
    switch (event) {
      case EV227:
        new S4();
        switch (event) {
          case EV228:
            log("note");
            new S24();
            try {
              new S23();
              new S29();
            } catch (IllegalStateException e) {
              new S25();
            } catch (IOException e) {
              log("note");
              log("note");
            }
            new S9();
            break;
          case EV229:
            new Helper();
            try {
              new S9();
              send("msg2");
            } catch (IOException e) {
              send("msg12");
              new S30();
              send("msg13");
              send("msg5");
            } catch (IllegalStateException e) {
              log("note");
              new S10();
              send("msg4");
              new S28();
            }
            break;
        }
        break;
      case EV230:
        send("msg8");
        new S2();
        switch (event) {
          case EV231:
            try {
              log("note");
              log("note");
            } catch (IllegalStateException e) {
              new S2();
              new S11();
            }
            new S16();
            new S6();
            if (x0 > 0) {
              new S19();
            } else {
              send("msg19");
              send("msg18");
            }
            break;
        }
        send("msg12");
        break;
      case EV232:
        send("msg5");
        if (x5 > 0) {
          send("msg4");
        }
        new S13();
        break;
    }
    new S10();
    if (x4 > 0) {
      switch (event) {
        case EV233:
          send("msg2");
          new S3();
          send("msg5");
          break;
        case EV234:
          new S18();
          send("msg1");
          if (x3 > 0) {
            send("msg14");
            send("msg6");
            send("msg3");
          } else {
            send("msg9");
          }
          new S15();
          break;
      }
      new Helper();
    }
  }
  void tick() {
    send("msg3");
    new S12();
  }
  void reset() {
    try {
      new S15();
    } catch (IOException e) {
      if (x3 > 0) {
        try {
          log("note");
        } catch (TimeoutException e) {
          new S5();
          send("msg11");
        } finally {
          log("note");
          log("note");
        }
        if (x2 > 0) {
          new S13();
        }
      } else {
        send("msg17");
        if (x7 > 0) {
          new S2();
          new S1();
        } else {
          new S19();
          new S9();
          send("msg13");
        }
        switch (event) {
          case EV235:
            send("msg6");
            break;
          case EV236:
            send("msg18");
            break;
        }
      }
      switch (event) {
        case EV237:
          send("msg12");
          break;
        case EV238:
          new State();
          log("note");
          break;
      }
      new Helper();
      send("msg12");
    } catch (IllegalStateException e) {
      send("msg6");
      send("msg9");
    }
    new S19();
  }
}
