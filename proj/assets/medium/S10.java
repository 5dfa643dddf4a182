class S10 extends Abstract4 {
  public void enter() {
    send("msg8");
    new S6();
    send("msg19");
  }
  public void exit() {
    log("note");
    try {
      try {
        send("msg0");
        try {
          send("msg13");
        } catch (IOException e) {
          new State();
          send("msg3");
          new S23();
          send("msg15");
        }
        switch (event) {
          case EV151:
            new S14();
            break;
        }
      } catch (TimeoutException e) {
        send("msg19");
        new S23();
        log("note");
      } catch (TimeoutException e) {
        new S16();
        send("msg4");
        try {
          new S19();
          send("msg8");
          new S20();
          send("msg15");
        } catch (IOException e) {
          new S26();
          send("msg7");
        }
        new S1();
      }
      try {
        switch (event) {
          case EV152:
            log("note");
            send("msg5");
            send("msg17");
            new S16();
            break;
          case EV153:
            new S4();
            new S13();
            new S10();
            log("note");
            break;
        }
        send("msg7");
        send("msg2");
        new S15();
      } catch (IOException e) {
        new S30();
        new S6();
      } finally {
        new S15();
        send("msg4");
        if (x4 > 0) {
          send("msg3");
          new S10();
        } else {
          send("msg16");
          new S20();
          send("msg12");
        }
      }
    } finally {
      new S5();
    }
  }
  void handle() {
    switch (event) {
      case EV154:
        try {
          if (x2 > 0) {
            new Helper();
            send("msg1");
            new S18();
          }
          send("msg19");
          new S17();
        } catch (IllegalStateException e) {
          if (x9 > 0) {
            send("msg12");
          } else {
            send("msg14");
            send("msg2");
          }
          try {
            new S2();
            log("note");
            new State();
          } catch (IOException e) {
            log("note");
          } finally {
            new S25();
            new Helper();
          }
        } catch (IOException e) {
          if (x6 > 0) {
            send("msg7");
            new S5();
          }
        }
        new Helper();
        break;
    }
  }
  void tick() {
    switch (event) {
      case EV155:
        switch (event) {
          case EV156:
            if (x7 > 0) {
              new S12();
              new S9();
              send("msg10");
            }
            break;
          case EV157:
            try {
              new S13();
            } catch (IllegalStateException e) {
              send("msg0");
              send("msg13");
            } finally {
              new S21();
              send("msg7");
            }
            if (x0 > 0) {
              send("msg18");
              send("msg12");
            } else {
              send("msg9");
              send("msg19");
            }
            send("msg17");
            new Helper();
            break;
          case EV158:
            new S6();
            break;
        }
        break;
      case EV159:
        new S2();
        new S4();
        break;
    }
    new S21();
    send("msg5");
    new S29();
  }
  void reset() {
    switch (event) {
      case EV160:
        send("msg19");
        send("msg11");
        new S20();
        break;
      case EV161:
        send("msg9");
        if (x4 > 0) {
          new S23();
          send("msg13");
          new Helper();
        } else {
          new S28();
          if (x4 > 0) {
            new S17();
          }
        }
        if (x6 > 0) {
          if (x0 > 0) {
            new S9();
          }
          switch (event) {
            case EV162:
              send("msg11");
              new S6();
              break;
            case EV163:
              new Helper();
              break;
          }
          switch (event) {
            case EV164:
              new S30();
              new S7();
              new S30();
              break;
            case EV165:
              send("msg19");
              send("msg9");
              new S28();
              new S3();
              break;
          }
          try {
            new S11();
            new S3();
          } catch (IOException e) {
            new S25();
            send("msg9");
            new S5();
            new S26();
          }
        }
        send("msg6");
        break;
    }
    try {
      new S15();
      if (x9 > 0) {
        switch (event) {
          case EV166:
            new S12();
            break;
          case EV167:
            new S8();
            send("msg7");
            break;
          case EV168:
            new S25();
            new S6();
            break;
        }
      } else {
        send("msg9");
      }
      if (x2 > 0) {
        send("msg17");
        send("msg15");
      } else {
        send("msg3");
        try {
          new S9();
        } catch (TimeoutException e) {
          send("msg10");
        } finally {
          send("msg10");
        }
        new Helper();
        new State();
      }
      try {
        new S22();
        new S2();
      } catch (TimeoutException e) {
        new S24();
        try {
          send("msg10");
          new S2();
          new S16();
          send("msg18");
        } catch (IOException e) {
          send("msg14");
          new S27();
          new Helper();
          new S22();
        }
      } catch (IOException e) {
        new Helper();
        send("msg11");
        if (x8 > 0) {
          new S24();
        }
        log("note");
      }
    } catch (IOException e) {
      switch (event) {
        case EV169:
          switch (event) {
            case EV170:
              send("msg4");
              new S24();
              break;
            case EV171:
              new S29();
              new S25();
              break;
            case EV172:
              log("note");
              break;
          }
          log("note");
          break;
        case EV173:
          log("note");
          send("msg18");
          new S24();
          log("note");
          break;
      }
      try {
        try {
          log("note");
          send("msg17");
        } catch (IOException e) {
          send("msg3");
        }
        new S29();
      } catch (TimeoutException e) {
        switch (event) {
          case EV174:
            new S14();
            send("msg13");
            send("msg8");
            new S25();
            break;
          case EV175:
            new S21();
            new S19();
            break;
        }
        new S25();
        new S15();
        send("msg6");
      }
      new S22();
      switch (event) {
        case EV176:
          switch (event) {
            case EV177:
              log("note");
              log("note");
              break;
          }
          switch (event) {
            case EV178:
              new S26();
              break;
            case EV179:
              new S18();
              break;
            case EV180:
              new S28();
              new S29();
              break;
          }
          break;
      }
    }
  }
}
